"""Parsers for formulas, structures, sequents, and derivation scripts.

Concrete syntax (ASCII):

    variables        [a-z][a-z0-9_]*  (dn, neg reserved)
    Flat formulas    0   a & b   a ~> b      sugar: ~a = a ~> 0, a | b = ~a ~> b
    InqL formulas    0   /\\  ->  \\/         sugar: ~f, ?f = f \\/ ~f,
                                              =(p1,...,pn,q) = ?p1 /\\ ... /\\ ?pn -> ?q
    General formulas dn(alpha)  /\\  \\/  =>   sugar: neg A = A => dn(0)
    Flat structures  Ph   G , D   G |> D   F(X)   plus formulas as atoms
    General structs  Dn(G)   Fs(G)   X ; Y   X > Y   plus formulas as atoms
    Sequents         <structure> |- <structure>, both sides of one sort

Sugar is expanded while parsing; printers emit the desugared connectives,
so parse(print(t)) = t.  Derivation scripts are s-expressions, one
derivation per UTF-8 file:

    (rule "<name>" (seq "<antecedent>" "<succedent>") <premise>*)
"""

from __future__ import annotations

import re

from . import metavars as mv
from .errors import MixedSortError, ParseError
from .formulas import (
    Cap,
    FImp,
    FVar,
    FZERO,
    Down,
    GAnd,
    GImp,
    GOr,
    IAnd,
    IImp,
    IOr,
    IVar,
    IZERO,
    InqFormula,
    FlatFormula,
    GeneralFormula,
    flat_join,
    flat_neg,
    gen_neg,
    inq_dependence,
    inq_neg,
    inq_question,
)
from .structures import (
    Comma,
    Derivation,
    DownOf,
    FOf,
    FStarOf,
    FlatFml,
    FlatStructure,
    GenFml,
    GeneralStructure,
    Gt,
    PHI,
    Semi,
    Sequent,
    Structure,
    Sup,
)

_TOKEN_RE = re.compile(r"~>|\|>|\|-|/\\|\\/|->|=>|[&|~?>;,()=]|[A-Za-z][A-Za-z0-9_]*|0")
_VAR_RE = re.compile(r"[a-z][a-z0-9_]*")
_KEYWORDS = frozenset(("Ph", "F", "Fs", "Dn", "dn", "neg"))
EOF = "<eof>"


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN_RE.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        tokens.append((m.group(), i))
        i = m.end()
    tokens.append((EOF, n))
    return tokens


def _is_variable(tok: str) -> bool:
    return tok not in _KEYWORDS and _VAR_RE.fullmatch(tok) is not None


class _Parser:
    def __init__(self, text: str, pattern_mode: bool = False):
        self.tokens = _tokenize(text)
        self.i = 0
        self.pattern_mode = pattern_mode

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def pos(self) -> int:
        return self.tokens[self.i][1]

    def advance(self) -> str:
        tok = self.tokens[self.i][0]
        self.i += 1
        return tok

    def expect(self, tok: str):
        if self.peek() != tok:
            raise ParseError(f"expected {tok!r}, found {self.peek()!r}", self.pos())
        self.advance()

    def expect_eof(self):
        if self.peek() != EOF:
            raise ParseError(f"unexpected trailing input {self.peek()!r}", self.pos())

    # ---------------------------------------------------------------- InqL

    def inql(self) -> InqFormula:
        left = self.inql_or()
        if self.peek() == "->":
            self.advance()
            return IImp(left, self.inql())
        return left

    def inql_or(self) -> InqFormula:
        f = self.inql_and()
        while self.peek() == "\\/":
            self.advance()
            f = IOr(f, self.inql_and())
        return f

    def inql_and(self) -> InqFormula:
        f = self.inql_unary()
        while self.peek() == "/\\":
            self.advance()
            f = IAnd(f, self.inql_unary())
        return f

    def inql_unary(self) -> InqFormula:
        if self.peek() == "~":
            self.advance()
            return inq_neg(self.inql_unary())
        if self.peek() == "?":
            self.advance()
            return inq_question(self.inql_unary())
        return self.inql_atom()

    def inql_atom(self) -> InqFormula:
        tok, pos = self.tokens[self.i]
        if tok == "0":
            self.advance()
            return IZERO
        if tok == "(":
            self.advance()
            f = self.inql()
            self.expect(")")
            return f
        if tok == "=":
            self.advance()
            self.expect("(")
            names = [self._variable()]
            while self.peek() == ",":
                self.advance()
                names.append(self._variable())
            self.expect(")")
            args = [IVar(n) for n in names]
            return inq_dependence(args[:-1], args[-1])
        if _is_variable(tok):
            self.advance()
            return IVar(tok)
        raise ParseError(f"expected an InqL formula, found {tok!r}", pos)

    def _variable(self) -> str:
        tok, pos = self.tokens[self.i]
        if not _is_variable(tok):
            raise ParseError(f"expected a variable, found {tok!r}", pos)
        self.advance()
        return tok

    # ---------------------------------------------------------------- Flat

    def flat(self) -> FlatFormula:
        left = self.flat_join()
        if self.peek() == "~>":
            self.advance()
            return FImp(left, self.flat())
        return left

    def flat_join(self) -> FlatFormula:
        f = self.flat_and()
        while self.peek() == "|":
            self.advance()
            f = flat_join(f, self.flat_and())
        return f

    def flat_and(self) -> FlatFormula:
        f = self.flat_unary()
        while self.peek() == "&":
            self.advance()
            f = Cap(f, self.flat_unary())
        return f

    def flat_unary(self) -> FlatFormula:
        if self.peek() == "~":
            self.advance()
            return flat_neg(self.flat_unary())
        return self.flat_atom()

    def flat_atom(self) -> FlatFormula:
        tok, pos = self.tokens[self.i]
        if tok == "0":
            self.advance()
            return FZERO
        if tok == "(":
            self.advance()
            f = self.flat()
            self.expect(")")
            return f
        if self.pattern_mode:
            if tok in mv.PMETA_NAMES:
                self.advance()
                return mv.PMeta(tok)
            if tok in mv.FLAT_FMETA_NAMES:
                self.advance()
                return mv.FMetaF(tok)
            raise ParseError(f"expected a Flat formula pattern, found {tok!r}", pos)
        if _is_variable(tok):
            self.advance()
            return FVar(tok)
        raise ParseError(f"expected a Flat formula, found {tok!r}", pos)

    # ------------------------------------------------------------- General

    def general(self) -> GeneralFormula:
        left = self.gen_or()
        if self.peek() == "=>":
            self.advance()
            return GImp(left, self.general())
        return left

    def gen_or(self) -> GeneralFormula:
        f = self.gen_and()
        while self.peek() == "\\/":
            self.advance()
            f = GOr(f, self.gen_and())
        return f

    def gen_and(self) -> GeneralFormula:
        f = self.gen_unary()
        while self.peek() == "/\\":
            self.advance()
            f = GAnd(f, self.gen_unary())
        return f

    def gen_unary(self) -> GeneralFormula:
        if self.peek() == "neg":
            self.advance()
            return gen_neg(self.gen_unary())
        return self.gen_atom()

    def gen_atom(self) -> GeneralFormula:
        tok, pos = self.tokens[self.i]
        if tok == "dn":
            self.advance()
            self.expect("(")
            body = self.flat()
            self.expect(")")
            return Down(body)
        if tok == "(":
            self.advance()
            f = self.general()
            self.expect(")")
            return f
        if self.pattern_mode and tok in mv.GEN_FMETA_NAMES:
            self.advance()
            return mv.FMetaG(tok)
        raise ParseError(f"expected a General formula, found {tok!r}", pos)

    # ---------------------------------------------------- Flat structures

    def flat_structure(self) -> FlatStructure:
        left = self.fs_comma()
        if self.peek() == "|>":
            self.advance()
            return Sup(left, self.flat_structure())
        return left

    def fs_comma(self) -> FlatStructure:
        s = self.fs_atom()
        while self.peek() == ",":
            self.advance()
            s = Comma(s, self.fs_atom())
        return s

    def fs_atom(self) -> FlatStructure:
        tok, pos = self.tokens[self.i]
        if tok == "Ph":
            self.advance()
            return PHI
        if tok == "F":
            self.advance()
            self.expect("(")
            body = self.general_structure()
            self.expect(")")
            return FOf(body)
        if self.pattern_mode and tok in mv.FLAT_SMETA_NAMES:
            self.advance()
            return mv.SMetaF(tok)
        mark = self.i
        try:
            return FlatFml(self.flat())
        except ParseError:
            self.i = mark
        if tok == "(":
            self.advance()
            s = self.flat_structure()
            self.expect(")")
            return s
        raise ParseError(f"expected a Flat structure, found {tok!r}", pos)

    # ------------------------------------------------- General structures

    def general_structure(self) -> GeneralStructure:
        left = self.gs_semi()
        if self.peek() == ">":
            self.advance()
            return Gt(left, self.general_structure())
        return left

    def gs_semi(self) -> GeneralStructure:
        s = self.gs_atom()
        while self.peek() == ";":
            self.advance()
            s = Semi(s, self.gs_atom())
        return s

    def gs_atom(self) -> GeneralStructure:
        tok, pos = self.tokens[self.i]
        if tok == "Dn":
            self.advance()
            self.expect("(")
            body = self.flat_structure()
            self.expect(")")
            return DownOf(body)
        if tok == "Fs":
            self.advance()
            self.expect("(")
            body = self.flat_structure()
            self.expect(")")
            return FStarOf(body)
        if self.pattern_mode and tok in mv.GEN_SMETA_NAMES:
            self.advance()
            return mv.SMetaG(tok)
        mark = self.i
        try:
            return GenFml(self.general())
        except ParseError:
            self.i = mark
        if tok == "(":
            self.advance()
            s = self.general_structure()
            self.expect(")")
            return s
        raise ParseError(f"expected a General structure, found {tok!r}", pos)


# ---------------------------------------------------------------------------
# Entry points


def parse_inql(text: str) -> InqFormula:
    p = _Parser(text)
    f = p.inql()
    p.expect_eof()
    return f


def parse_flat(text: str, pattern_mode: bool = False) -> FlatFormula:
    p = _Parser(text, pattern_mode)
    f = p.flat()
    p.expect_eof()
    return f


def parse_general(text: str, pattern_mode: bool = False) -> GeneralFormula:
    p = _Parser(text, pattern_mode)
    f = p.general()
    p.expect_eof()
    return f


def parse_flat_structure(text: str, pattern_mode: bool = False) -> FlatStructure:
    p = _Parser(text, pattern_mode)
    s = p.flat_structure()
    p.expect_eof()
    return s


def parse_general_structure(text: str, pattern_mode: bool = False) -> GeneralStructure:
    p = _Parser(text, pattern_mode)
    s = p.general_structure()
    p.expect_eof()
    return s


def _parse_side(text: str, pattern_mode: bool = False) -> dict:
    """Parse text as a structure of each sort it admits."""
    out = {}
    errors = []
    for sort, method in (("Flat", "flat_structure"), ("General", "general_structure")):
        p = _Parser(text, pattern_mode)
        try:
            s = getattr(p, method)()
            p.expect_eof()
            out[sort] = s
        except ParseError as e:
            errors.append(e)
    if not out:
        raise max(errors, key=lambda e: e.pos)
    return out


def parse_structure(text: str, pattern_mode: bool = False) -> Structure:
    sides = _parse_side(text, pattern_mode)
    # leaves of the two sorts are disjoint, so at most one parse succeeds
    return next(iter(sides.values()))


def sequent_from_sides(ant_text: str, suc_text: str, pattern_mode: bool = False) -> Sequent:
    ant = _parse_side(ant_text, pattern_mode)
    suc = _parse_side(suc_text, pattern_mode)
    common = [sort for sort in ("Flat", "General") if sort in ant and sort in suc]
    if not common:
        raise MixedSortError(
            f"mixed types: antecedent is {'/'.join(ant)}, succedent is {'/'.join(suc)}: "
            f"{ant_text} |- {suc_text}"
        )
    sort = common[0]
    return Sequent(ant[sort], suc[sort])


def parse_sequent(text: str, pattern_mode: bool = False) -> Sequent:
    parts = _split_turnstile(text)
    return sequent_from_sides(parts[0], parts[1], pattern_mode)


def _split_turnstile(text: str) -> tuple[str, str]:
    tokens = _tokenize(text)
    positions = [pos for tok, pos in tokens if tok == "|-"]
    if len(positions) != 1:
        raise ParseError("a sequent needs exactly one |-", positions[1] if positions else len(text))
    pos = positions[0]
    return text[:pos], text[pos + 2 :]


# ---------------------------------------------------------------------------
# Derivation scripts

_SEXP_TOKEN_RE = re.compile(r'\(|\)|"[^"]*"|[A-Za-z][A-Za-z0-9_-]*')


def _sexp_tokens(text: str) -> list[tuple[str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _SEXP_TOKEN_RE.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {text[i]!r} in script", i)
        tokens.append((m.group(), i))
        i = m.end()
    tokens.append((EOF, n))
    return tokens


def parse_derivation(text: str) -> Derivation:
    tokens = _sexp_tokens(text)
    node, i = _parse_deriv_node(tokens, 0)
    if tokens[i][0] != EOF:
        raise ParseError("unexpected trailing input in script", tokens[i][1])
    return node


def _expect_tok(tokens, i, want):
    tok, pos = tokens[i]
    if tok != want:
        raise ParseError(f"expected {want!r}, found {tok!r}", pos)
    return i + 1


def _string_tok(tokens, i) -> tuple[str, int]:
    tok, pos = tokens[i]
    if not (tok.startswith('"') and tok.endswith('"')):
        raise ParseError(f"expected a quoted string, found {tok!r}", pos)
    return tok[1:-1], i + 1


def _parse_deriv_node(tokens, i) -> tuple[Derivation, int]:
    i = _expect_tok(tokens, i, "(")
    i = _expect_tok(tokens, i, "rule")
    name, i = _string_tok(tokens, i)
    i = _expect_tok(tokens, i, "(")
    i = _expect_tok(tokens, i, "seq")
    ant, i = _string_tok(tokens, i)
    suc, i = _string_tok(tokens, i)
    i = _expect_tok(tokens, i, ")")
    premises = []
    while tokens[i][0] == "(":
        node, i = _parse_deriv_node(tokens, i)
        premises.append(node)
    i = _expect_tok(tokens, i, ")")
    return Derivation(sequent_from_sides(ant, suc), name, tuple(premises)), i


def derivation_to_sexp(d: Derivation) -> str:
    lines: list[str] = []

    def emit(node: Derivation, depth: int):
        pad = "  " * depth
        head = (
            f'{pad}(rule "{node.rule}" '
            f'(seq "{node.conclusion.antecedent}" "{node.conclusion.succedent}")'
        )
        lines.append(head)
        for p in node.premises:
            emit(p, depth + 1)
        lines[-1] += ")"

    emit(d, 0)
    return "\n".join(lines) + "\n"

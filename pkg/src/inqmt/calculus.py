"""Derivation checking and per-instance semantic soundness auditing.

Checking matches every node of a derivation against the schemas
registered under its rule name; double-line schemas are tried in both
directions.  The surgical Flat cut searches the consumer premise for an
antecedent-part occurrence of the cut formula whose replacement by the
provider's antecedent yields the conclusion.  On top of shape matching,
every node passes the operational-subterm lint (premise terms are
subterms of conclusion terms or of the cut formula) and cuts are checked
for sort-uniform cut-formula occurrences; sequents are type-uniform by
construction.

Auditing interprets each rule instance over the two algebras: a sequent
holds under an assignment of teams to its variables when the antecedent
denotation is included in the succedent denotation, and a rule instance
is audited by quantifying assignments (exhaustively when the space is
small, sampled otherwise) and demanding that premise inclusions imply
the conclusion inclusion.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Callable, Optional

from . import metavars as mv
from .algebra import TeamAlgebra, for_context
from .contexts import Context
from .errors import InqmtError
from .formulas import (
    Cap,
    Down,
    FImp,
    FVar,
    FZero,
    FlatFormula,
    GAnd,
    GImp,
    GOr,
    GeneralFormula,
)
from .rules import FAMILIES, RuleSchema, pattern_metas, rule_table
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
    Path,
    Phi,
    Semi,
    Sequent,
    Sort,
    Sup,
    children,
    iter_paths,
    operational_terms,
    replace_at,
    sequent_variables,
    side_structure,
    structure_at,
    term_is_covered,
)


class Polarity(Enum):
    ANT = "antecedent-part"
    SUC = "succedent-part"


def polarity_of(seq: Sequent, path: Path) -> Polarity:
    """Polarity of the occurrence addressed by path.

    Comma, semicolon, and the unary connectives preserve the parent
    polarity; the two arrow connectives flip it in their first coordinate.
    """
    if path[0] not in ("ant", "suc"):
        raise ValueError(f"path must start with 'ant' or 'suc': {path!r}")
    pol = Polarity.ANT if path[0] == "ant" else Polarity.SUC
    s = side_structure(seq, path[0])
    for step in path[1:]:
        kids = children(s)
        if step >= len(kids):
            raise ValueError(f"invalid path {path!r} at {s}")
        if isinstance(s, (Sup, Gt)) and step == 0:
            pol = Polarity.SUC if pol is Polarity.ANT else Polarity.ANT
        s = kids[step]
    return pol


# ---------------------------------------------------------------------------
# Pattern matching


def _match_formula(pat, val, bnd) -> bool:
    if isinstance(pat, mv.PMeta):
        if not isinstance(val, FVar):
            return False
        prior = bnd.get(pat)
        if prior is None:
            bnd[pat] = val
            return True
        return prior == val
    if isinstance(pat, mv.FMetaF):
        if not isinstance(val, FlatFormula) or mv.is_meta(val):
            return False
    elif isinstance(pat, mv.FMetaG):
        if not isinstance(val, GeneralFormula) or mv.is_meta(val):
            return False
    else:
        if type(pat) is not type(val):
            return False
        if isinstance(pat, FVar):
            return pat.name == val.name
        if isinstance(pat, FZero):
            return True
        if isinstance(pat, Down):
            return _match_formula(pat.body, val.body, bnd)
        return _match_formula(pat.left, val.left, bnd) and _match_formula(
            pat.right, val.right, bnd
        )
    prior = bnd.get(pat)
    if prior is None:
        bnd[pat] = val
        return True
    return prior == val


def _match_structure(pat, val, bnd) -> bool:
    if isinstance(pat, mv.SMetaF):
        if not isinstance(val, FlatStructure) or mv.is_meta(val):
            return False
    elif isinstance(pat, mv.SMetaG):
        if not isinstance(val, GeneralStructure) or mv.is_meta(val):
            return False
    else:
        if type(pat) is not type(val):
            return False
        if isinstance(pat, Phi):
            return True
        if isinstance(pat, (FlatFml, GenFml)):
            return _match_formula(pat.formula, val.formula, bnd)
        pk, vk = children(pat), children(val)
        return all(_match_structure(p, v, bnd) for p, v in zip(pk, vk))
    prior = bnd.get(pat)
    if prior is None:
        bnd[pat] = val
        return True
    return prior == val


def _match_sequent(pat: Sequent, val: Sequent, bnd) -> bool:
    return _match_structure(pat.antecedent, val.antecedent, bnd) and _match_structure(
        pat.succedent, val.succedent, bnd
    )


@dataclass(frozen=True)
class MatchBinding:
    schema: RuleSchema
    bindings: dict
    reversed_direction: bool = False
    cut_formula: object = None
    cut_path: Path | None = None


def _match_surgical(schema, conclusion, premises, active: Path | None) -> Optional[MatchBinding]:
    if len(premises) != 2:
        return None
    provider, consumer = premises
    if provider.sort is not Sort.FLAT or not isinstance(provider.succedent, FlatFml):
        return None
    alpha = provider.succedent.formula
    gamma = provider.antecedent
    if consumer.sort is not conclusion.sort:
        return None
    target = FlatFml(alpha)
    if active is not None:
        paths = [active]
    else:
        paths = [p for p, s in iter_paths(consumer) if s == target]
    for path in paths:
        try:
            if structure_at(consumer, path) != target:
                continue
            if polarity_of(consumer, path) is not Polarity.ANT:
                continue
        except (ValueError, IndexError):
            continue
        if replace_at(consumer, path, gamma) == conclusion:
            return MatchBinding(schema, {}, cut_formula=alpha, cut_path=path)
    return None


def match_rule(schema: RuleSchema, conclusion: Sequent, premises: list[Sequent]):
    """Match one schema instance; None when the shapes do not fit."""
    if schema.surgical:
        return _match_surgical(schema, conclusion, premises, None)
    if len(premises) != len(schema.premises):
        return None
    directions = [(schema.premises, schema.conclusion, False)]
    if schema.bidirectional:
        directions.append(((schema.conclusion,), schema.premises[0], True))
    for prem_pats, concl_pat, rev in directions:
        bnd: dict = {}
        if not _match_sequent(concl_pat, conclusion, bnd):
            continue
        if all(_match_sequent(pp, pv, bnd) for pp, pv in zip(prem_pats, premises)):
            cut_formula = None
            if schema.name == "Cut":
                cut_formula = bnd.get(mv.FMetaG("A"))
            return MatchBinding(schema, bnd, rev, cut_formula=cut_formula)
    return None


def match_name(name: str, conclusion: Sequent, premises: list[Sequent]):
    for schema in FAMILIES.get(name, ()):
        m = match_rule(schema, conclusion, premises)
        if m is not None:
            return m
    return None


# ---------------------------------------------------------------------------
# Derivation checking


@dataclass(frozen=True)
class NodeRecord:
    addr: tuple[int, ...]
    rule: str
    status: str
    variant: str = ""
    note: str = ""


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    records: tuple[NodeRecord, ...]
    error_addr: tuple[int, ...] | None = None
    error_rule: str | None = None
    reason: str | None = None

    def lines(self) -> list[str]:
        out = []
        for r in self.records:
            label = f"{'.'.join(map(str, r.addr)) or 'root'}: {r.rule}"
            suffix = f"  [{r.note}]" if r.note else ""
            out.append(f"{label}: {r.status}{suffix}")
        return out


def _check_node(node: Derivation) -> tuple[Optional[MatchBinding], str, str]:
    """Returns (match, reason, note); match None means failure."""
    family = FAMILIES.get(node.rule)
    if not family:
        return None, f"unknown rule {node.rule!r}", ""
    premises = [p.conclusion for p in node.premises]
    arity_ok = False
    for schema in family:
        if schema.n_premises != len(premises):
            continue
        arity_ok = True
        if schema.surgical:
            m = _match_surgical(schema, node.conclusion, premises, node.active)
        else:
            m = match_rule(schema, node.conclusion, premises)
        if m is not None:
            note = "extension: display postulate" if schema.extension else ""
            return m, "", note
    if not arity_ok:
        return None, f"{node.rule} takes a different number of premises", ""
    return None, f"shape mismatch for {node.rule}", ""


def _c1_lint(node: Derivation, m: MatchBinding) -> str | None:
    conclusion_terms = operational_terms(node.conclusion)
    extra = m.cut_formula
    for p in node.premises:
        for t in operational_terms(p.conclusion):
            if term_is_covered(t, conclusion_terms):
                continue
            if extra is not None and term_is_covered(t, [extra]):
                continue
            return f"operational term {t} of a premise is not preserved (C1)"
    return None


def check_derivation(d: Derivation) -> CheckResult:
    records: list[NodeRecord] = []
    first_error: tuple | None = None
    for addr, node in d.nodes():
        m, reason, note = _check_node(node)
        if m is not None:
            lint = _c1_lint(node, m)
            if lint is not None:
                m, reason = None, lint
        if m is None:
            records.append(NodeRecord(addr, node.rule, "error", note=reason))
            if first_error is None:
                first_error = (addr, node.rule, reason)
        else:
            records.append(NodeRecord(addr, node.rule, "ok", m.schema.variant, note))
    if first_error is None:
        return CheckResult(True, tuple(records))
    return CheckResult(False, tuple(records), *first_error)


# ---------------------------------------------------------------------------
# Structure denotation


def denote_structure(
    s, pol: Polarity, alg: TeamAlgebra, assignment: dict[str, int], leaf: Callable = None
):
    """Interpret a structure at a polarity.

    Phi reads as the unit of its position (all worlds in antecedent
    position, no worlds in succedent position); comma and semicolon as
    meet/join by position; the Flat arrow as Boolean difference in
    antecedent position and material implication in succedent position;
    the General arrow as co-implication and relative pseudo-complement;
    F, F*, Dn as the three maps, F* having no succedent reading."""

    def default_leaf(node, p):
        if isinstance(node, FlatFml):
            return alg.denote_flat(node.formula, assignment)
        if isinstance(node, GenFml):
            return alg.denote_general(node.formula, assignment)
        raise TypeError(f"cannot denote {node!r}")

    leaf = leaf or default_leaf

    def run(node, p: Polarity):
        if isinstance(node, Phi):
            return alg.full_team if p is Polarity.ANT else 0
        if isinstance(node, Comma):
            l, r = run(node.left, p), run(node.right, p)
            return l & r if p is Polarity.ANT else l | r
        if isinstance(node, Sup):
            if p is Polarity.ANT:
                return alg.complement_team(run(node.left, Polarity.SUC)) & run(
                    node.right, Polarity.ANT
                )
            return alg.complement_team(run(node.left, Polarity.ANT)) | run(
                node.right, Polarity.SUC
            )
        if isinstance(node, FOf):
            return alg.f(run(node.body, p))
        if isinstance(node, DownOf):
            return alg.downset(run(node.body, p))
        if isinstance(node, FStarOf):
            if p is Polarity.SUC:
                raise InqmtError("Fs has no succedent-part reading")
            return alg.f_star(run(node.body, Polarity.ANT))
        if isinstance(node, Semi):
            l, r = run(node.left, p), run(node.right, p)
            return l & r if p is Polarity.ANT else l | r
        if isinstance(node, Gt):
            if p is Polarity.SUC:
                return alg.heyting(run(node.left, Polarity.ANT), run(node.right, Polarity.SUC))
            return alg.coimp(run(node.right, Polarity.ANT), run(node.left, Polarity.SUC))
        return leaf(node, p)

    return run(s, pol)


def sequent_holds(seq: Sequent, alg: TeamAlgebra, assignment: dict[str, int], leaf=None) -> bool:
    a = denote_structure(seq.antecedent, Polarity.ANT, alg, assignment, leaf)
    s = denote_structure(seq.succedent, Polarity.SUC, alg, assignment, leaf)
    return a & ~s == 0


# ---------------------------------------------------------------------------
# Per-instance soundness auditing


@dataclass(frozen=True)
class AuditViolation:
    addr: tuple[int, ...]
    rule: str
    assignment: dict[str, int]


@dataclass
class AuditReport:
    violations: list[AuditViolation] = field(default_factory=list)
    nodes_checked: int = 0
    assignments_checked: int = 0
    sampled_nodes: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def audit_soundness(
    d: Derivation,
    ctx: Context,
    samples: int = 10_000,
    max_exhaustive: int = 100_000,
    seed: int = 0,
) -> AuditReport:
    """Check every rule instance of d over assignments of teams to its
    variables: whenever all premise inclusions hold, the conclusion
    inclusion must hold.  Exhaustive when the assignment space fits under
    max_exhaustive, otherwise sampled."""
    alg = for_context(ctx)
    rng = random.Random(seed)
    report = AuditReport()
    teams = range(ctx.n_teams)
    for addr, node in d.nodes():
        name_set = set(sequent_variables(node.conclusion))
        for p in node.premises:
            name_set |= sequent_variables(p.conclusion)
        names = sorted(name_set)
        space = ctx.n_teams ** len(names)
        if space <= max_exhaustive:
            assignments = product(teams, repeat=len(names))
        else:
            report.sampled_nodes += 1
            assignments = (
                tuple(rng.randrange(ctx.n_teams) for _ in names) for _ in range(samples)
            )
        report.nodes_checked += 1
        for values in assignments:
            report.assignments_checked += 1
            assignment = dict(zip(names, values))
            if all(sequent_holds(p.conclusion, alg, assignment) for p in node.premises):
                if not sequent_holds(node.conclusion, alg, assignment):
                    report.violations.append(AuditViolation(addr, node.rule, assignment))
                    break
    return report


# ---------------------------------------------------------------------------
# Schema-level soundness (denotation-level, metavariables quantified)


def _meta_polarities(schema: RuleSchema) -> dict:
    """Polarity set of every metavariable occurrence across the schema."""
    out: dict = {}

    def scan(seq: Sequent):
        for path, sub in iter_paths(seq):
            nodes = [sub]
            if isinstance(sub, (FlatFml, GenFml)):
                stack = [sub.formula]
                while stack:
                    f = stack.pop()
                    if mv.is_meta(f):
                        nodes.append(f)
                    elif isinstance(f, Down):
                        stack.append(f.body)
                    elif hasattr(f, "left"):
                        stack.extend((f.left, f.right))
            for n in nodes:
                if mv.is_meta(n):
                    out.setdefault(n, set()).add(polarity_of(seq, path))

    for p in schema.premises:
        scan(p)
    scan(schema.conclusion)
    return out


def _meta_domains(schema: RuleSchema, alg: TeamAlgebra, downsets) -> list[tuple]:
    """(metavariable, value domain) pairs for the soundness quantifier.

    General metavariables with a succedent-part occurrence, and General
    formula metavariables everywhere, range over down-sets containing the
    empty team: succedent-part structures and formulas cannot denote the
    empty collection, and the inverse Phi rules are only sound on that
    reachable fragment.
    """
    pols = _meta_polarities(schema)
    nonempty = tuple(x for x in downsets if x & 1)
    domains = []
    teams = tuple(alg.all_teams())
    for meta in sorted(pols, key=lambda m: (type(m).__name__, m.name)):
        if isinstance(meta, (mv.SMetaF, mv.FMetaF, mv.PMeta)):
            domains.append((meta, teams))
        elif isinstance(meta, mv.FMetaG):
            domains.append((meta, nonempty))
        elif isinstance(meta, mv.SMetaG):
            if Polarity.SUC in pols[meta]:
                domains.append((meta, nonempty))
            else:
                domains.append((meta, downsets))
    return domains


def _pattern_leaf(valuation, alg):
    def leaf(node, pol):
        if mv.is_meta(node):
            return valuation[node]
        if isinstance(node, FlatFml):
            return _denote_formula_pattern(node.formula, valuation, alg)
        if isinstance(node, GenFml):
            return _denote_formula_pattern(node.formula, valuation, alg)
        raise TypeError(f"cannot denote pattern leaf {node!r}")

    return leaf


def _denote_formula_pattern(f, valuation, alg):
    if mv.is_meta(f):
        return valuation[f]
    if isinstance(f, FZero):
        return 0
    if isinstance(f, FVar):
        raise TypeError("patterns carry no concrete variables")
    if isinstance(f, Cap):
        return _denote_formula_pattern(f.left, valuation, alg) & _denote_formula_pattern(
            f.right, valuation, alg
        )
    if isinstance(f, FImp):
        a = _denote_formula_pattern(f.left, valuation, alg)
        b = _denote_formula_pattern(f.right, valuation, alg)
        return alg.complement_team(a) | b
    if isinstance(f, Down):
        return alg.downset(_denote_formula_pattern(f.body, valuation, alg))
    if isinstance(f, GAnd):
        return _denote_formula_pattern(f.left, valuation, alg) & _denote_formula_pattern(
            f.right, valuation, alg
        )
    if isinstance(f, GOr):
        return _denote_formula_pattern(f.left, valuation, alg) | _denote_formula_pattern(
            f.right, valuation, alg
        )
    if isinstance(f, GImp):
        return alg.heyting(
            _denote_formula_pattern(f.left, valuation, alg),
            _denote_formula_pattern(f.right, valuation, alg),
        )
    raise TypeError(f"cannot denote formula pattern {f!r}")


def _pattern_sequent_holds(seq: Sequent, alg, valuation) -> bool:
    return sequent_holds(seq, alg, {}, leaf=_pattern_leaf(valuation, alg))


# the consumer contexts against which the surgical cut is audited: a
# pattern sequent whose single occurrence of the formula metavariable a
# marks the antecedent-part hole
_CUT_CONTEXTS = (
    "a |- S",
    "a , D |- S",
    "D |> a |- S",
    "P |- a |> S",
    "Dn(a) |- Y",
    "Dn(a , D) |- Y",
    "Dn(D |> a) |- Y",
)


def schema_soundness_counterexample(schema: RuleSchema, ctx: Context):
    """Exhaustively search metavariable denotations for a failing
    instantiation; None when the schema is sound on the context."""
    alg = for_context(ctx)
    downsets = alg.all_downsets()
    if schema.surgical:
        return _surgical_counterexample(alg, downsets)
    directions = [(schema.premises, schema.conclusion)]
    if schema.bidirectional:
        directions.append(((schema.conclusion,), schema.premises[0]))
    domains = _meta_domains(schema, alg, downsets)
    metas = [m for m, _ in domains]
    for prems, concl in directions:
        for values in product(*(dom for _, dom in domains)):
            valuation = dict(zip(metas, values))
            if all(_pattern_sequent_holds(p, alg, valuation) for p in prems):
                if not _pattern_sequent_holds(concl, alg, valuation):
                    return {m.name: v for m, v in valuation.items()}
    return None


def _surgical_counterexample(alg: TeamAlgebra, downsets):
    from .rules import pseq

    hole = mv.FMetaF("a")
    provider_gamma = mv.SMetaF("G")
    for text in _CUT_CONTEXTS:
        consumer = pseq(text)
        others = [m for m in pattern_metas(consumer) if m != hole]
        domains = []
        for m in others:
            if isinstance(m, (mv.SMetaF, mv.FMetaF, mv.PMeta)):
                domains.append(tuple(alg.all_teams()))
            else:
                domains.append(downsets)
        for gamma_val in alg.all_teams():
            for alpha_val in alg.all_teams():
                if gamma_val & ~alpha_val:
                    continue  # provider premise fails
                for values in product(*domains) if domains else [()]:
                    valuation = dict(zip(others, values))
                    valuation[hole] = alpha_val
                    if not _pattern_sequent_holds(consumer, alg, valuation):
                        continue
                    valuation[hole] = gamma_val
                    if not _pattern_sequent_holds(consumer, alg, valuation):
                        return {
                            "context": text,
                            "gamma": gamma_val,
                            "alpha": alpha_val,
                            **{m.name: v for m, v in zip(others, values)},
                        }
    return None


def check_rule_table_soundness(ctx: Context, table=None):
    """Counterexample search over every schema; returns (variant, witness)
    pairs, empty when the whole table is sound on the context."""
    failures = []
    for schema in table or rule_table():
        witness = schema_soundness_counterexample(schema, ctx)
        if witness is not None:
            failures.append((schema.variant, witness))
    return failures

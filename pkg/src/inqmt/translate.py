"""Translations between InqL and the two-sorted language.

``tau_c`` maps classical formulas into the Flat sort, ``tau_i`` maps any
InqL formula into the General sort, routing maximal classical subformulas
through ``tau_c`` under a single dn.  ``flatten`` is the classical
rewrite of inquisitive disjunction, and ``collapse_to_flat`` inverts dn
on the disjunction-free General fragment.

The multi-type Hilbert axioms are provided as shape builders together
with semantic validators (denotation equal to the top of the appropriate
algebra); there is no Hilbert proof object here, the calculus is the
proof system of this package.
"""

from __future__ import annotations

from .algebra import TeamAlgebra
from .errors import NotClassicalError
from .formulas import (
    Cap,
    Down,
    FImp,
    FVar,
    FZERO,
    FlatFormula,
    GAnd,
    GFALSUM,
    GImp,
    GOr,
    GeneralFormula,
    IAnd,
    IImp,
    IOr,
    IVar,
    IZero,
    InqFormula,
    flat_neg,
    gen_neg,
    inq_neg,
    is_classical,
)


def tau_c(chi: InqFormula) -> FlatFormula:
    """Translate a classical formula into the Flat sort."""
    if isinstance(chi, IVar):
        return FVar(chi.name)
    if isinstance(chi, IZero):
        return FZERO
    if isinstance(chi, IAnd):
        return Cap(tau_c(chi.left), tau_c(chi.right))
    if isinstance(chi, IImp):
        return FImp(tau_c(chi.left), tau_c(chi.right))
    if isinstance(chi, IOr):
        raise NotClassicalError(f"tau_c needs a classical formula, got {chi}")
    raise TypeError(f"not an InqL formula: {chi!r}")


def tau_i(phi: InqFormula) -> GeneralFormula:
    """Translate any InqL formula into the General sort.

    Maximal classical subformulas go through tau_c under one dn, so the
    result is the smallest General formula the translation tables allow.
    """
    if is_classical(phi):
        return Down(tau_c(phi))
    if isinstance(phi, IAnd):
        return GAnd(tau_i(phi.left), tau_i(phi.right))
    if isinstance(phi, IImp):
        return GImp(tau_i(phi.left), tau_i(phi.right))
    if isinstance(phi, IOr):
        return GOr(tau_i(phi.left), tau_i(phi.right))
    raise TypeError(f"not an InqL formula: {phi!r}")


def flatten(phi: InqFormula) -> InqFormula:
    """The classical flattening: rewrite every l \\/ r into ~l -> r, bottom-up."""
    if isinstance(phi, (IVar, IZero)):
        return phi
    if isinstance(phi, IAnd):
        return IAnd(flatten(phi.left), flatten(phi.right))
    if isinstance(phi, IImp):
        return IImp(flatten(phi.left), flatten(phi.right))
    if isinstance(phi, IOr):
        return IImp(inq_neg(flatten(phi.left)), flatten(phi.right))
    raise TypeError(f"not an InqL formula: {phi!r}")


def collapse_to_flat(a: GeneralFormula) -> FlatFormula | None:
    """Collapse a disjunction-free General formula to a Flat equivalent.

    Within the fragment dn(alpha) | A /\\ A | A => A the result alpha
    satisfies dn(alpha) -||- A; conjunction collapses to &, implication
    to ~>.  Returns None when the formula falls outside the fragment.
    """
    if isinstance(a, Down):
        return a.body
    if isinstance(a, GAnd):
        left, right = collapse_to_flat(a.left), collapse_to_flat(a.right)
        if left is None or right is None:
            return None
        return Cap(left, right)
    if isinstance(a, GImp):
        left, right = collapse_to_flat(a.left), collapse_to_flat(a.right)
        if left is None or right is None:
            return None
        return FImp(left, right)
    if isinstance(a, GOr):
        return None
    raise TypeError(f"not a General formula: {a!r}")


# ---------------------------------------------------------------------------
# Multi-type Hilbert axioms.  A1 instantiates classical schemata in the
# Flat sort, A2 intuitionistic schemata in the General sort (with dn(0)
# as the falsum), A3 and A4 are the two mixed axioms.


def a1_instances(a: FlatFormula, b: FlatFormula, c: FlatFormula) -> list[FlatFormula]:
    return [
        FImp(a, FImp(b, a)),
        FImp(FImp(a, FImp(b, c)), FImp(FImp(a, b), FImp(a, c))),
        FImp(FImp(flat_neg(a), flat_neg(b)), FImp(b, a)),
    ]


def a2_instances(a: GeneralFormula, b: GeneralFormula, c: GeneralFormula) -> list[GeneralFormula]:
    return [
        GImp(a, GImp(b, a)),
        GImp(GImp(a, GImp(b, c)), GImp(GImp(a, b), GImp(a, c))),
        GImp(GAnd(a, b), a),
        GImp(GAnd(a, b), b),
        GImp(a, GImp(b, GAnd(a, b))),
        GImp(a, GOr(a, b)),
        GImp(b, GOr(a, b)),
        GImp(GImp(a, c), GImp(GImp(b, c), GImp(GOr(a, b), c))),
        GImp(GFALSUM, a),
    ]


def a3_instance(alpha: FlatFormula, a: GeneralFormula, b: GeneralFormula) -> GeneralFormula:
    """(dn(alpha) => (A \\/ B)) => (dn(alpha) => A) \\/ (dn(alpha) => B)."""
    d = Down(alpha)
    return GImp(GImp(d, GOr(a, b)), GOr(GImp(d, a), GImp(d, b)))


def a4_instance(alpha: FlatFormula) -> GeneralFormula:
    """neg neg dn(alpha) => dn(alpha)."""
    d = Down(alpha)
    return GImp(gen_neg(gen_neg(d)), d)


def flat_denotes_top(alg: TeamAlgebra, alpha: FlatFormula, assignment: dict[str, int]) -> bool:
    return alg.denote_flat(alpha, assignment) == alg.full_team


def general_denotes_top(alg: TeamAlgebra, a: GeneralFormula, assignment: dict[str, int]) -> bool:
    return alg.denote_general(a, assignment) == alg.top_a


def flat_mp_preserves_top(
    alg: TeamAlgebra, alpha: FlatFormula, beta: FlatFormula, assignment: dict[str, int]
) -> bool:
    if flat_denotes_top(alg, FImp(alpha, beta), assignment) and flat_denotes_top(
        alg, alpha, assignment
    ):
        return flat_denotes_top(alg, beta, assignment)
    return True


def general_mp_preserves_top(
    alg: TeamAlgebra, a: GeneralFormula, b: GeneralFormula, assignment: dict[str, int]
) -> bool:
    if general_denotes_top(alg, GImp(a, b), assignment) and general_denotes_top(
        alg, a, assignment
    ):
        return general_denotes_top(alg, b, assignment)
    return True

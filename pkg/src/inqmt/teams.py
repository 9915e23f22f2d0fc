"""Brute-force team semantics for InqL over a finite variable context.

``support`` is the reference evaluator: a direct transcription of the
support clauses, with the implication clause walking every subteam.  The
table evaluator computes the full set of supporting teams bottom-up with
exact mask arithmetic; the implication case quantifies over subteams
through an up-closure sweep, not through any flatness shortcut.  The two
routes are cross-checked against each other (and against the pointwise
shortcut for flat formulas) by the test suite; validity and entailment
run on tables.

Routines that quantify over subteams of every team are capped at three
variables; plain team enumeration is capped at four (by the context).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import algebra
from .contexts import MAX_VARS_SUBTEAM, Context, subteams
from .errors import NotClassicalError, SizeCapError
from .formulas import (
    IAnd,
    IImp,
    IOr,
    IVar,
    IZero,
    InqFormula,
    inq_neg,
    is_classical,
)


def _check_subteam_cap(ctx: Context, what: str):
    if ctx.n_vars > MAX_VARS_SUBTEAM:
        raise SizeCapError(
            f"{what} walks subteams of every team; cap is {MAX_VARS_SUBTEAM} "
            f"variables, got {ctx.n_vars}"
        )


def support(ctx: Context, team: int, phi: InqFormula) -> bool:
    """S |= phi by direct recursion on the support clauses."""
    memo: dict[tuple[InqFormula, int], bool] = {}

    def run(f: InqFormula, s: int) -> bool:
        key = (f, s)
        if key in memo:
            return memo[key]
        if isinstance(f, IVar):
            out = s & ~ctx.var_team(f.name) == 0
        elif isinstance(f, IZero):
            out = s == 0
        elif isinstance(f, IAnd):
            out = run(f.left, s) and run(f.right, s)
        elif isinstance(f, IOr):
            out = run(f.left, s) or run(f.right, s)
        elif isinstance(f, IImp):
            out = all(not run(f.left, sub) or run(f.right, sub) for sub in subteams(s))
        else:
            raise TypeError(f"not an InqL formula: {f!r}")
        memo[key] = out
        return out

    return run(phi, team)


def support_table(ctx: Context, phi: InqFormula) -> int:
    """Mask over all teams: bit S set iff S |= phi."""
    alg = algebra.for_context(ctx)

    def run(f: InqFormula) -> int:
        if isinstance(f, IVar):
            return alg.downset(ctx.var_team(f.name))
        if isinstance(f, IZero):
            return 1
        if isinstance(f, IAnd):
            return run(f.left) & run(f.right)
        if isinstance(f, IOr):
            return run(f.left) | run(f.right)
        if isinstance(f, IImp):
            return alg.heyting(run(f.left), run(f.right))
        raise TypeError(f"not an InqL formula: {f!r}")

    return run(phi)


def support_pointwise(ctx: Context, team: int, phi: InqFormula) -> bool:
    """The flat fast path: support at every singleton.

    Agrees with ``support`` exactly on flat formulas; kept as a
    cross-check, never used as the evaluator.
    """
    return all(support(ctx, 1 << w, phi) for w in ctx.team_members(team))


def valid(ctx: Context, phi: InqFormula) -> bool:
    """Supported by every team over the context."""
    alg = algebra.for_context(ctx)
    return support_table(ctx, phi) == alg.full


def entails(ctx: Context, premises: Iterable[InqFormula], phi: InqFormula) -> bool:
    """Every team supporting all premises supports phi."""
    alg = algebra.for_context(ctx)
    holds = alg.full
    for g in premises:
        holds &= support_table(ctx, g)
    return holds & ~support_table(ctx, phi) == 0


def is_flat_semantic(ctx: Context, phi: InqFormula) -> bool:
    """Support determined pointwise: S |= phi iff {v} |= phi for all v in S."""
    _check_subteam_cap(ctx, "is_flat_semantic")
    alg = algebra.for_context(ctx)
    table = support_table(ctx, phi)
    good = 0
    for w in ctx.worlds():
        if (table >> (1 << w)) & 1:
            good |= 1 << w
    return table == alg.downset(good)


def check_deduction_theorem(
    ctx: Context, premises: Sequence[InqFormula], phi: InqFormula, psi: InqFormula
) -> bool:
    """Whether  premises, phi |= psi  iff  premises |= phi -> psi  holds."""
    _check_subteam_cap(ctx, "check_deduction_theorem")
    left = entails(ctx, list(premises) + [phi], psi)
    right = entails(ctx, premises, IImp(phi, psi))
    return left == right


def check_disjunction_property(ctx: Context, phi: InqFormula, psi: InqFormula) -> bool:
    """Whether validity of phi \\/ psi forces validity of a disjunct."""
    _check_subteam_cap(ctx, "check_disjunction_property")
    if not valid(ctx, IOr(phi, psi)):
        return True
    return valid(ctx, phi) or valid(ctx, psi)


# ---------------------------------------------------------------------------
# Semantic validators for the Hilbert-style axioms over InqL.


def axiom2_shape(chi: InqFormula, phi: InqFormula, psi: InqFormula) -> InqFormula:
    """(chi -> (phi \\/ psi)) -> (chi -> phi) \\/ (chi -> psi)."""
    return IImp(
        IImp(chi, IOr(phi, psi)),
        IOr(IImp(chi, phi), IImp(chi, psi)),
    )


def axiom3_shape(chi: InqFormula) -> InqFormula:
    """~~chi -> chi."""
    return IImp(inq_neg(inq_neg(chi)), chi)


def thm26_axiom2_valid(ctx: Context, chi: InqFormula, phi: InqFormula, psi: InqFormula) -> bool:
    if not is_classical(chi):
        raise NotClassicalError(f"axiom 2 requires a classical antecedent: {chi}")
    return valid(ctx, axiom2_shape(chi, phi, psi))


def thm26_axiom3_valid(ctx: Context, chi: InqFormula) -> bool:
    if not is_classical(chi):
        raise NotClassicalError(f"axiom 3 requires a classical formula: {chi}")
    return valid(ctx, axiom3_shape(chi))


def check_modus_ponens(ctx: Context, phi: InqFormula, psi: InqFormula) -> bool:
    """Validity of phi and of phi -> psi forces validity of psi."""
    if valid(ctx, IImp(phi, psi)) and valid(ctx, phi):
        return valid(ctx, psi)
    return True

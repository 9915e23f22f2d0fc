"""Bounded random generators shared across the test modules."""

from inqmt.formulas import (
    Cap,
    Down,
    FImp,
    FVar,
    FZERO,
    GAnd,
    GImp,
    GOr,
    IAnd,
    IImp,
    IOr,
    IVar,
    IZERO,
)
from inqmt.structures import (
    Comma,
    DownOf,
    FOf,
    FStarOf,
    FlatFml,
    GenFml,
    Gt,
    PHI,
    Semi,
    Sup,
)

VARS = ("p", "q", "r")


def rand_inql(rng, depth, names=VARS):
    if depth <= 0 or rng.random() < 0.3:
        return rng.choice([IVar(v) for v in names] + [IZERO])
    op = rng.choice((IAnd, IImp, IOr))
    return op(rand_inql(rng, depth - 1, names), rand_inql(rng, rng.randrange(depth), names))


def rand_flat(rng, depth, names=VARS):
    if depth <= 0 or rng.random() < 0.3:
        return rng.choice([FVar(v) for v in names] + [FZERO])
    op = rng.choice((Cap, FImp))
    return op(rand_flat(rng, depth - 1, names), rand_flat(rng, rng.randrange(depth), names))


def rand_general(rng, depth, names=VARS):
    if depth <= 0 or rng.random() < 0.3:
        return Down(rand_flat(rng, 1, names))
    op = rng.choice((GAnd, GOr, GImp))
    return op(rand_general(rng, depth - 1, names), rand_general(rng, rng.randrange(depth), names))


def rand_flat_structure(rng, depth):
    if depth <= 0:
        return rng.choice((PHI, FlatFml(rand_flat(rng, 1))))
    k = rng.randrange(5)
    if k == 0:
        return Comma(rand_flat_structure(rng, depth - 1), rand_flat_structure(rng, depth - 1))
    if k == 1:
        return Sup(rand_flat_structure(rng, depth - 1), rand_flat_structure(rng, depth - 1))
    if k == 2:
        return FOf(rand_general_structure(rng, depth - 1))
    if k == 3:
        return FlatFml(rand_flat(rng, 2))
    return PHI


def rand_general_structure(rng, depth):
    if depth <= 0:
        return rng.choice((DownOf(PHI), GenFml(rand_general(rng, 1))))
    k = rng.randrange(5)
    if k == 0:
        return Semi(rand_general_structure(rng, depth - 1), rand_general_structure(rng, depth - 1))
    if k == 1:
        return Gt(rand_general_structure(rng, depth - 1), rand_general_structure(rng, depth - 1))
    if k == 2:
        return DownOf(rand_flat_structure(rng, depth - 1))
    if k == 3:
        return FStarOf(rand_flat_structure(rng, depth - 1))
    return GenFml(rand_general(rng, 2))

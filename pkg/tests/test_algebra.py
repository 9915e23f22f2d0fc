import random
from itertools import product

import pytest

from inqmt import algebra
from inqmt.contexts import Context
from inqmt.errors import SizeCapError
from inqmt.formulas import Cap, Down, FImp, FVar, GOr, flat_join, flat_neg
from inqmt.parser import parse_general

from helpers import rand_flat

P1 = Context.of("p")
P2 = Context.of("p,q")
A1 = algebra.for_context(P1)
A2 = algebra.for_context(P2)


def test_downset_examples():
    assert A2.downset(0) == 1
    assert A2.downset(A2.full_team) == A2.top_a
    w = 1 << 2
    assert A2.downset(w) == 1 | (1 << w)


def test_f_examples():
    assert A2.f(1) == 0
    for s in A2.all_teams():
        assert A2.f(A2.downset(s)) == s


def test_f_star_example():
    team = 0b11
    assert A2.f_star(team) == 1 | (1 << 1) | (1 << 2)
    assert A2.f_star(0) == 1


def test_heyting_examples():
    downs = A2.all_downsets()
    for y in downs:
        assert A2.heyting(y, A2.top_a) == A2.top_a
    for x in A2.all_teams():
        for y in A2.all_teams():
            lhs = A2.downset(A2.complement_team(x) | y)
            assert lhs == A2.heyting(A2.downset(x), A2.downset(y))
    for z in downs:
        if z & 1:
            assert A2.heyting(1, z) == A2.top_a


def test_coimp_examples_and_residuation():
    downs = A1.all_downsets()
    for x in downs:
        assert A1.coimp(x, A1.bot_a) == x
        assert A1.coimp(x, x) == A1.bot_a
    checked = 0
    for x, y, z in product(downs, repeat=3):
        checked += 1
        assert (x & ~(y | z) == 0) == (A1.coimp(x, y) & ~z == 0)
    assert checked == 216


def test_adjunctions_exhaustive():
    for alg in (A1, A2):
        downs = alg.all_downsets()
        for x in downs:
            for s in alg.all_teams():
                assert (alg.f(x) & ~s == 0) == (x & ~alg.downset(s) == 0)
                if x & 1:
                    assert (alg.f_star(s) & ~x == 0) == (s & ~alg.f(x) == 0)
        # the one corner of the second adjunction: f* always adds the
        # empty team, so the law needs collections containing it
        assert alg.f_star(0) == 1
        assert alg.f_star(0) & ~alg.bot_a


def test_unit_and_counit():
    for alg in (A1, A2):
        for x in alg.all_downsets():
            assert x & ~alg.downset(alg.f(x)) == 0
        for s in alg.all_teams():
            for t in alg.all_teams():
                if s & ~t == 0:
                    assert alg.f_star(s) & ~alg.downset(t) == 0


def test_preservation_facts():
    for alg in (A1, A2):
        teams_ = list(alg.all_teams())
        for s in teams_:
            for t in teams_:
                assert alg.downset(s & t) == alg.downset(s) & alg.downset(t)
                assert alg.f_star(s | t) == alg.f_star(s) | alg.f_star(t)
        downs = alg.all_downsets()
        for x in downs:
            for y in downs:
                assert alg.f(x & y) == alg.f(x) & alg.f(y)
                assert alg.f(x | y) == alg.f(x) | alg.f(y)


def test_kp_inclusion():
    downs = A1.all_downsets()
    checked = 0
    for x, y, z in product(downs, repeat=3):
        checked += 1
        dx = A1.downset(A1.f(x))
        assert A1.heyting(dx, y | z) & ~(A1.heyting(dx, y) | A1.heyting(dx, z)) == 0
    assert checked == 216
    # the literal statement, first argument a team
    for s in A1.all_teams():
        ds = A1.downset(s)
        for y, z in product(downs, repeat=2):
            assert A1.heyting(ds, y | z) & ~(A1.heyting(ds, y) | A1.heyting(ds, z)) == 0


def test_kp_needs_principal_antecedent():
    # a non-principal down-set separates the two sides
    x = 0b111  # empty team and both singletons, not of the form downset(s)
    y, z = 0b011, 0b101
    assert A1.down_closure(x) == x and A1.downset(A1.f(x)) != x
    assert A1.heyting(x, y | z) & ~(A1.heyting(x, y) | A1.heyting(x, z))


def test_every_operation_stays_downward_closed():
    rng = random.Random(12)
    downs = A2.all_downsets()
    for _ in range(300):
        x, y = rng.choice(downs), rng.choice(downs)
        s = rng.randrange(A2.n_teams)
        for value in (
            A2.downset(s),
            A2.f_star(s),
            A2.heyting(x, y),
            A2.coimp(x, y),
            x & y,
            x | y,
        ):
            assert A2.is_downward_closed(value)


def test_denotation_examples():
    assignment = A2.canonical_assignment()
    assert A2.denote_general(parse_general("dn(0)"), assignment) == 1
    rng = random.Random(13)
    for _ in range(80):
        a, b = rand_flat(rng, 2, ("p", "q")), rand_flat(rng, 2, ("p", "q"))
        da = A2.denote_flat(a, assignment)
        db = A2.denote_flat(b, assignment)
        assert A2.denote_flat(flat_join(a, b), assignment) == da | db
        assert A2.denote_general(Down(Cap(a, b)), assignment) == A2.downset(da) & A2.downset(db)
        assert A2.denote_general(Down(FImp(a, b)), assignment) == A2.heyting(
            A2.downset(da), A2.downset(db)
        )
    assert A2.denote_general(Down(FVar("p")), assignment) == A2.downset(P2.var_team("p"))


def test_denote_unknown_variable():
    with pytest.raises(ValueError):
        A2.denote_flat(FVar("zz"), A2.canonical_assignment())


def test_is_flat_algebraic():
    assignment = A1.canonical_assignment()
    rng = random.Random(14)
    for _ in range(50):
        assert A1.is_flat_algebraic(Down(rand_flat(rng, 3, ("p",))), assignment)
    split = GOr(Down(FVar("p")), Down(flat_neg(FVar("p"))))
    assert not A1.is_flat_algebraic(split, assignment)
    top = Down(FImp(FVar("p"), FVar("p")))
    assert A1.denote_general(top, assignment) == A1.top_a
    assert A1.is_flat_algebraic(top, assignment)


def test_downset_enumeration_caps():
    assert len(A1.all_downsets()) == 6
    assert len(A2.all_downsets()) == 168
    with pytest.raises(SizeCapError):
        algebra.for_context(Context.of("p,q,r")).all_downsets()

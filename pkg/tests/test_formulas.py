import random

from inqmt.formulas import (
    Cap,
    Down,
    FImp,
    FVar,
    FZERO,
    GAnd,
    IAnd,
    IImp,
    IOr,
    IVar,
    IZERO,
    enumerate_inql,
    formula_size,
    inq_dependence,
    inq_neg,
    inq_question,
    is_classical,
    is_subterm,
    inq_variables,
)

from helpers import rand_inql

p, q, r = IVar("p"), IVar("q"), IVar("r")


def test_is_classical_examples():
    assert is_classical(IImp(p, IAnd(q, IZERO)))
    assert not is_classical(IOr(p, q))
    # disjunction buried under an implication still disqualifies
    assert not is_classical(inq_neg(IOr(p, q)))


def test_sugar_constructors():
    assert inq_neg(p) == IImp(p, IZERO)
    assert inq_question(p) == IOr(p, inq_neg(p))
    assert inq_dependence([], q) == inq_question(q)
    assert inq_dependence([p], q) == IImp(inq_question(p), inq_question(q))
    two = inq_dependence([p, q], r)
    assert two == IImp(IAnd(inq_question(p), inq_question(q)), inq_question(r))


def test_enumerate_inql_counts():
    assert len(enumerate_inql(("p", "q"), 1)) == 3
    assert len(enumerate_inql(("p", "q"), 2)) == 30
    pop = enumerate_inql(("p", "q"), 3)
    assert len(pop) == 2703
    assert len(set(pop)) == 2703


def test_variables_and_size():
    phi = IImp(IOr(p, q), IAnd(q, IZERO))
    assert inq_variables(phi) == {"p", "q"}
    assert formula_size(phi) == 7
    assert formula_size(Down(Cap(FVar("p"), FZERO))) == 4


def test_subterm_crosses_down():
    a = Cap(FVar("p"), FVar("q"))
    g = GAnd(Down(a), Down(FVar("r")))
    assert is_subterm(Down(a), g)
    assert not is_subterm(Down(FVar("q")), g)
    assert is_subterm(FVar("q"), a)


def test_structural_equality_is_hashable():
    rng = random.Random(0)
    for _ in range(50):
        f = rand_inql(rng, 3)
        assert hash(f) == hash(f)
        assert f == f


def test_printing_is_stable():
    phi = IOr(p, inq_neg(p))
    assert str(phi) == "p \\/ (p -> 0)"
    assert str(IImp(p, IImp(q, r))) == "p -> q -> r"
    assert str(IImp(IImp(p, q), r)) == "(p -> q) -> r"
    assert str(Cap(FVar("a1"), FImp(FVar("b"), FZERO))) == "a1 & (b ~> 0)"

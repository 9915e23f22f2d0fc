import random

import pytest

from inqmt.errors import MixedSortError
from inqmt.formulas import Cap, FVar
from inqmt.parser import parse_sequent, parse_structure
from inqmt.structures import (
    Comma,
    Derivation,
    FlatFml,
    Sequent,
    iter_paths,
    operational_terms,
    replace_at,
    sequent_variables,
    structure_at,
    term_is_covered,
)

from helpers import rand_flat_structure


def test_sequent_constructor_enforces_uniformity():
    with pytest.raises(MixedSortError):
        Sequent(parse_structure("p"), parse_structure("Dn(p)"))


def test_paths_address_every_occurrence():
    seq = parse_sequent("(p , q) |> r |- F(Dn(0))")
    found = dict(iter_paths(seq))
    assert found[("ant",)] == seq.antecedent
    assert found[("ant", 0, 1)] == FlatFml(FVar("q"))
    assert found[("suc", 0, 0)] == parse_structure("0")
    for path, sub in found.items():
        assert structure_at(seq, path) == sub


def test_replace_at_round_trips():
    rng = random.Random(50)
    for _ in range(80):
        seq = Sequent(rand_flat_structure(rng, 3), rand_flat_structure(rng, 3))
        paths = list(iter_paths(seq))
        path, sub = paths[rng.randrange(len(paths))]
        unchanged = replace_at(seq, path, sub)
        assert unchanged == seq
        swapped = replace_at(seq, path, FlatFml(FVar("zz")))
        assert structure_at(swapped, path) == FlatFml(FVar("zz"))


def test_operational_terms_and_coverage():
    seq = parse_sequent("p & q , r |- p")
    terms = operational_terms(seq)
    assert Cap(FVar("p"), FVar("q")) in terms and FVar("r") in terms
    concl = operational_terms(parse_sequent("dn(p & q) |- dn(p)"))
    assert term_is_covered(Cap(FVar("p"), FVar("q")), concl)
    assert term_is_covered(FVar("q"), concl)
    assert not term_is_covered(FVar("zz"), concl)


def test_sequent_variables():
    assert sequent_variables(parse_sequent("p & q |- r ~> 0")) == {"p", "q", "r"}


def test_derivation_tree_utilities():
    leaf = Derivation(parse_sequent("p |- p"), "Id")
    tree = Derivation(
        parse_sequent("p , q |- p & q"),
        "capR",
        (leaf, Derivation(parse_sequent("q |- q"), "Id")),
    )
    assert tree.at((0,)) == leaf
    assert [addr for addr, _ in tree.nodes()] == [(), (0,), (1,)]
    other = Derivation(parse_sequent("p |- p"), "Id")
    swapped = tree.replace((1,), other)
    assert swapped.premises[1] == other and swapped.premises[0] == leaf
    assert tree.variables() == {"p", "q"}

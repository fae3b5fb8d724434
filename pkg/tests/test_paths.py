import itertools
from fractions import Fraction as F
from math import lcm

import pytest

from lsalgebra import fixtures
from lsalgebra.errors import NonComparableSupports, NotAnLSPath, ParseError, WidthOne, ZeroPath
from lsalgebra.paths import (
    LSPath,
    canonical_form,
    chain_lattice_basis,
    decompose_degree_one,
    enumerate_on_chain,
    enumerate_paths,
    extremal,
    is_ls_path,
    is_standard,
    ls_path,
    path_from_json,
    split_head,
    width,
)
from lsalgebra.poset import build_poset, lcm_bonds, maximal_chains
from lsalgebra.vectors import PathVector

from conftest import ALL_FIXTURES


def P(**values):
    return PathVector({k: F(v) for k, v in values.items()})


# -- validation ------------------------------------------------------------------

def test_is_ls_path_examples(chain121, i24):
    assert is_ls_path(chain121, P(x="1/2", y="1/2"), 1)
    assert not is_ls_path(chain121, P(e="1/2", x="1/2"), 1)
    assert not is_ls_path(i24, PathVector({"14": F(1, 2), "23": F(1, 2)}), 1)
    assert not is_ls_path(chain121, P(x="1/2", y="1/2"), 2)
    assert not is_ls_path(chain121, P(x="3/2", y="-1/2"), 1)


def test_ls_path_constructor_and_json(chain121):
    p = ls_path(chain121, P(x="1/2", y="1/2"))
    assert p.degree == 1
    assert p.to_json() == {"degree": 1, "values": {"x": "1/2", "y": "1/2"}}
    assert path_from_json(chain121, p.to_json()) == p
    with pytest.raises(NotAnLSPath):
        ls_path(chain121, P(x="1/2"))
    with pytest.raises(NotAnLSPath):
        path_from_json(chain121, {"degree": 1, "values": {"e": "1/2", "x": "1/2"}})
    with pytest.raises(ParseError):
        path_from_json(chain121, {"degree": 1})


# -- enumeration --------------------------------------------------------------------

def brute_force_paths(poset, r):
    """Degree-r LS paths by scanning a grid of step 1/L on every maximal chain."""
    step = lcm(*(lcm_bonds(poset, s) for s in poset.elements))
    found = set()
    for chain in maximal_chains(poset):
        for parts in itertools.product(range(r * step + 1), repeat=len(chain)):
            if sum(parts) != r * step:
                continue
            vec = PathVector({s: F(p, step) for s, p in zip(chain, parts)})
            if is_ls_path(poset, vec, r):
                found.add(vec)
    return found


def test_enumerate_on_chain_examples(a1, chain121):
    got = enumerate_on_chain(a1, ("e", "s"), 1)
    assert set(got) == {P(e=1), P(e="2/3", s="1/3"), P(e="1/3", s="2/3"), P(s=1)}
    got = enumerate_on_chain(chain121, ("e", "x", "y", "z"), 1)
    assert set(got) == {P(e=1), P(x=1), P(y=1), P(z=1), P(x="1/2", y="1/2")}
    assert enumerate_on_chain(chain121, ("x", "y"), 0) == [LSPath()]


def test_enumerate_counts(i24):
    assert len(enumerate_paths(i24, 1)) == 6
    assert len(enumerate_paths(i24, 2)) == 20
    single = build_poset(["0"], [])
    assert enumerate_paths(single, 3) == [P(**{"0": 3})]


@pytest.mark.parametrize("name", ALL_FIXTURES)
@pytest.mark.parametrize("r", [1, 2, 3])
def test_enumeration_matches_grid_scan(name, r):
    poset = fixtures.FIXTURES[name]()
    assert set(enumerate_paths(poset, r)) == brute_force_paths(poset, r)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_enumeration_is_sorted_and_integral(name):
    poset = fixtures.FIXTURES[name]()
    for r in (1, 2, 3):
        paths = enumerate_paths(poset, r)
        assert len(set(paths)) == len(paths)
        for p in paths:
            for s, v in p.items():
                assert (lcm_bonds(poset, s) * v).denominator == 1


# -- decomposition --------------------------------------------------------------------

def test_decompose_examples(chain12):
    assert decompose_degree_one(chain12, P(e=1, x="1/2", y="1/2")) == [P(e=1), P(x="1/2", y="1/2")]
    assert decompose_degree_one(chain12, P(x=1, y=1)) == [P(x=1), P(y=1)]
    assert decompose_degree_one(chain12, P(y=3)) == [P(y=1)] * 3
    with pytest.raises(NotAnLSPath):
        decompose_degree_one(chain12, P(e="1/2", x="1/2"))


def test_non_standard_pair_is_rejected(chain12):
    half = P(x="1/2", y="1/2")
    assert not is_standard(chain12, (half, half))


def exhaustive_factorisations(poset, path):
    gens = enumerate_paths(poset, 1)
    r = int(path.total())
    return [combo for combo in itertools.product(gens, repeat=r)
            if is_standard(poset, combo) and sum(combo, PathVector()) == path]


@pytest.mark.parametrize("name", ["chain-12", "chain-121", "chain-33", "a1-bond3", "diamond", "i24"])
def test_decomposition_is_the_unique_standard_factorisation(name):
    poset = fixtures.FIXTURES[name]()
    for r in (1, 2, 3):
        for p in enumerate_paths(poset, r):
            factors = decompose_degree_one(poset, p)
            assert [tuple(factors)] == [tuple(c) for c in exhaustive_factorisations(poset, p)]


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_decomposition_round_trip(name):
    poset = fixtures.FIXTURES[name]()
    for r in (1, 2, 3, 4):
        for p in enumerate_paths(poset, r):
            factors = decompose_degree_one(poset, p)
            assert len(factors) == r
            assert all(is_ls_path(poset, f, 1) for f in factors)
            assert is_standard(poset, factors)
            assert sum(factors, PathVector()) == p


def test_canonical_form_examples(chain12, i24):
    half = ls_path(chain12, P(x="1/2", y="1/2"))
    assert canonical_form(chain12, (half, half)) == [P(x=1), P(y=1)]
    std = (extremal("e"), half)
    assert canonical_form(chain12, std) == list(std)
    assert canonical_form(chain12, (extremal("x"), extremal("x"))) == [P(x=1), P(x=1)]
    with pytest.raises(NonComparableSupports):
        canonical_form(i24, (extremal("14"), extremal("23")))


# -- splitting and width -----------------------------------------------------------------

def test_split_head_examples(chain12, a1, i24):
    assert split_head(chain12, P(x="1/2", y="1/2")) == (P(x="1/2", y="1/2"), P(y=1))
    assert split_head(a1, P(e="2/3", s="1/3")) == (P(e="1/3", s="2/3"), P(s=1))
    with pytest.raises(WidthOne):
        split_head(i24, P(**{"14": 1}))


def test_split_head_three_supports():
    # a degree-1 path with three support elements needs bonds that allow it
    poset = fixtures.chain_33()
    first, second = split_head(poset, P(e="1/3", x="1/3", y="1/3"))
    assert first == P(e="2/3", x="1/3")
    assert second == P(x="2/3", y="1/3")


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_split_head_factorisation_property(name):
    poset = fixtures.FIXTURES[name]()
    for p in enumerate_paths(poset, 1):
        if len(p.support) < 2:
            continue
        first, second = split_head(poset, p)
        s1 = poset.sort_chain(p.support)[0]
        assert canonical_form(poset, (first, p)) == [P(**{s1: 1}), second]


def test_width(chain121):
    assert width(chain121, P(y=1)) == 1
    assert width(chain121, P(x="1/2", y="1/2")) == 2
    assert width(chain121, P(e=1, z=1)) == 4
    with pytest.raises(ZeroPath):
        width(chain121, PathVector())


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_width_two_symmetries(name):
    poset = fixtures.FIXTURES[name]()
    for p in enumerate_paths(poset, 1):
        if len(p.support) != 2:
            continue
        s, t = poset.sort_chain(p.support)
        a, b = p[s], p[t]
        assert is_ls_path(poset, PathVector({s: b, t: a}), 1)
        if a >= F(1, 2):
            assert is_ls_path(poset, PathVector({s: 2 * a - 1, t: 2 * b}), 1)


# -- the lattice L_C ------------------------------------------------------------------------

def test_lattice_basis_a1(a1):
    lattice = chain_lattice_basis(a1, ("e", "s"))
    assert lattice.basis == [(F(1, 3), F(2, 3)), (F(0), F(1))]
    assert P(e="1/3", s="-1/3") in lattice
    assert P(e="1/3") not in lattice


def test_lattice_of_bond_one_chain_is_standard(i24):
    chain = ("12", "13", "14", "24", "34")
    lattice = chain_lattice_basis(i24, chain)
    assert len(lattice.basis) == 5
    assert all(PathVector({s: 1}) in lattice for s in chain)
    assert PathVector({"13": F(1, 2), "14": F(1, 2)}) not in lattice


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_ls_paths_are_the_nonnegative_lattice_points(name):
    poset = fixtures.FIXTURES[name]()
    chain = maximal_chains(poset)[0]
    lattice = chain_lattice_basis(poset, chain)
    step = lcm(*(lcm_bonds(poset, s) for s in chain))
    for r in (1, 2, 3):
        paths = set(enumerate_on_chain(poset, chain, r))
        grid = set()
        for parts in itertools.product(range(r * step + 1), repeat=len(chain)):
            if sum(parts) == r * step:
                vec = PathVector({s: F(p, step) for s, p in zip(chain, parts)})
                if vec in lattice:
                    grid.add(vec)
        assert paths == grid

import itertools
from fractions import Fraction as F

import networkx as nx
import pytest

from lsalgebra import fixtures
from lsalgebra.errors import MalformedPair, NotDominant, NotAnLSPath, UnsupportedType
from lsalgebra.paths import enumerate_paths
from lsalgebra.poset import maximal_chains, verify_gcd_condition
from lsalgebra.vectors import PathVector
from lsalgebra.weyl import (
    build_root_system,
    bruhat_covers,
    bruhat_poset,
    function_to_pair,
    pair_to_function,
    orbit_element,
    parse_weight,
    weight_label,
    weyl_dimension,
    weyl_orbit,
)


# -- root systems ------------------------------------------------------------------

@pytest.mark.parametrize("name, count", [
    ("A1", 1), ("A3", 6), ("A5", 15), ("B2", 4), ("B3", 9), ("C3", 9),
    ("D4", 12), ("G2", 6), ("F4", 24), ("E6", 36),
])
def test_positive_root_counts(name, count):
    assert len(build_root_system(name).positive_roots) == count


def test_a1_normalisation():
    rs = build_root_system("A", 1)
    (alpha,) = rs.positive_roots
    assert rs.form(alpha, alpha) == 2
    assert rs.coroot(alpha) == (1,)
    assert rs.cartan == ((2,),)


@pytest.mark.parametrize("name, ratio", [("B2", 2), ("C3", 2), ("G2", 3), ("F4", 2)])
def test_long_short_ratio(name, ratio):
    rs = build_root_system(name)
    lengths = {rs.form(b, b) for b in rs.positive_roots}
    assert max(lengths) == 2 and max(lengths) / min(lengths) == ratio


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_cartan_matches_the_form(name):
    rs = build_root_system(name)
    simple = [rs.fundamental(i) for i in range(rs.rank)]  # unit vectors in root coordinates
    for i, j in itertools.product(range(rs.rank), repeat=2):
        assert rs.cartan[i][j] == 2 * rs.form(simple[i], simple[j]) / rs.form(simple[j], simple[j])


@pytest.mark.parametrize("name", ["E7", "E8", "A8", "E5", "F3", "D3", "B1", "Z2", "A0", "X"])
def test_unsupported_types(name):
    with pytest.raises(UnsupportedType):
        build_root_system(name)


def test_weight_labels():
    assert parse_weight("1,0,-2") == (1, 0, -2)
    assert weight_label((1, 0, -2)) == "1,0,-2"
    with pytest.raises(MalformedPair):
        parse_weight("1,a")


# -- orbits and Bruhat posets ----------------------------------------------------------------

def test_orbit_sizes():
    assert len(weyl_orbit(build_root_system("A3"), (0, 1, 0))) == 6
    assert len(weyl_orbit(build_root_system("B2"), (1, 0))) == 4
    assert len(weyl_orbit(build_root_system("A2"), (1, 1))) == 6
    with pytest.raises(NotDominant):
        weyl_orbit(build_root_system("A2"), (-1, 1))
    with pytest.raises(NotDominant):
        weyl_orbit(build_root_system("A2"), (1,))


def test_orbit_words_are_reduced_witnesses():
    rs = build_root_system("B3")
    lam = (0, 1, 1)
    for e in weyl_orbit(rs, lam):
        assert len(e.word) == e.length
        mu = lam
        for i in reversed(e.word):
            mu = rs.reflect(mu, i - 1)
        assert mu == e.weight


def test_a3_omega2_is_i24():
    poset = bruhat_poset(build_root_system("A3"), (0, 1, 0))
    assert set(poset.bonds.values()) == {1}
    g1, g2 = nx.DiGraph(), nx.DiGraph()
    for (a, b), bond in poset.bonds.items():
        g1.add_edge(a, b, bond=bond)
    for (a, b), bond in fixtures.i24().bonds.items():
        g2.add_edge(a, b, bond=bond)
    assert nx.is_isomorphic(g1, g2, edge_match=lambda x, y: x["bond"] == y["bond"])


def test_b2_vector_representation_is_a_chain():
    poset = bruhat_poset(build_root_system("B2"), (1, 0))
    (chain,) = maximal_chains(poset)
    assert [poset.bond(a, b) for a, b in zip(chain, chain[1:])] == [1, 2, 1]


def test_a1_three_omega():
    poset = bruhat_poset(build_root_system("A1"), (3,))
    assert poset.bonds == {("3", "-3"): 3}


def test_schubert_restriction():
    rs = build_root_system("A2")
    full = bruhat_poset(rs, (1, 1))
    below = bruhat_poset(rs, (1, 1), tau="-1,2")
    assert below.top == "-1,2" and len(below) < len(full)
    assert set(below.elements) == {s for s in full.elements if full.leq(s, "-1,2")}
    assert orbit_element(rs, (1, 1), "-1,2").length == 1
    assert len(below) == 2
    with pytest.raises(MalformedPair):
        orbit_element(rs, (1, 1), "5,5")


CASES = [("A1", (3,)), ("B2", (1, 0)), ("B2", (0, 1)), ("A2", (1, 1)), ("A3", (0, 1, 0)),
         ("C3", (0, 1, 0)), ("G2", (1, 0)), ("A3", (1, 0, 1))]


@pytest.mark.parametrize("name, weight", CASES)
def test_generated_posets_are_valid(name, weight):
    rs = build_root_system(name)
    poset = bruhat_poset(rs, weight)
    assert verify_gcd_condition(poset).ok
    for s in poset.elements:
        assert verify_gcd_condition(bruhat_poset(rs, weight, tau=s)).ok


@pytest.mark.parametrize("name, weight", CASES)
def test_covers_are_reflections(name, weight):
    rs = build_root_system(name)
    orbit = weyl_orbit(rs, weight)
    by_label = {e.label: e for e in orbit}
    for lo, hi, bond in bruhat_covers(rs, orbit):
        mu, nu = by_label[lo].weight, by_label[hi].weight
        witnesses = [b for b in rs.positive_roots if rs.reflect_by(mu, b) == nu]
        assert len(witnesses) == 1
        assert rs.pair(mu, witnesses[0]) == bond
        assert by_label[hi].length == by_label[lo].length + 1


def _subword_down_set(rs, lam, word):
    """Points u(lam) for every subword u of the reduced word."""
    out = set()
    for mask in itertools.product((False, True), repeat=len(word)):
        mu = lam
        for i, keep in zip(reversed(word), reversed(mask)):
            if keep:
                mu = rs.reflect(mu, i - 1)
        out.add(mu)
    return out


@pytest.mark.parametrize("name, weight", [
    ("A2", (1, 1)), ("A3", (0, 1, 0)), ("A3", (1, 0, 1)), ("A3", (1, 1, 1)),
    ("B2", (1, 1)), ("B3", (1, 0, 0)), ("C3", (0, 1, 0)), ("G2", (1, 1)),
])
def test_bruhat_order_matches_subword_criterion(name, weight):
    rs = build_root_system(name)
    orbit = weyl_orbit(rs, weight)
    poset = bruhat_poset(rs, weight)
    for top in orbit:
        below = {weight_label(mu) for mu in _subword_down_set(rs, tuple(weight), top.word)}
        assert below == {s for s in poset.elements if poset.leq(s, top.label)}


# -- dimensions and the path model --------------------------------------------------------

def test_weyl_dimension_examples():
    assert weyl_dimension(build_root_system("A1"), (3,)) == 4
    assert weyl_dimension(build_root_system("A3"), (0, 2, 0)) == 20
    assert weyl_dimension(build_root_system("B2"), (1, 0)) == 5
    assert weyl_dimension(build_root_system("G2"), (1, 0)) == 7
    assert weyl_dimension(build_root_system("E6"), (1, 0, 0, 0, 0, 0)) == 27
    with pytest.raises(NotDominant):
        weyl_dimension(build_root_system("A1"), (-1,))


@pytest.mark.parametrize("name, weight", [("A1", (3,)), ("B2", (1, 0)), ("A2", (1, 1)), ("A3", (0, 1, 0)),
                                          ("G2", (1, 0)), ("C2", (0, 1))])
@pytest.mark.parametrize("r", [1, 2])
def test_path_counts_are_dimensions(name, weight, r):
    rs = build_root_system(name)
    poset = bruhat_poset(rs, weight)
    assert len(enumerate_paths(poset, r)) == weyl_dimension(rs, tuple(r * w for w in weight))


def test_a2_adjoint_fixture_is_the_bruhat_poset():
    assert fixtures.a2_adjoint().bonds == bruhat_poset(build_root_system("A2"), (1, 1)).bonds
    assert sorted(fixtures.a2_adjoint().bonds.values()).count(2) == 2


# -- pair presentation of LS paths -----------------------------------------------------------------------

def test_pair_presentation_examples():
    b2 = bruhat_poset(build_root_system("B2"), (1, 0))
    (chain,) = maximal_chains(b2)
    x, y = chain[1], chain[2]
    assert pair_to_function(b2, [chain[0]], [0, 1]) == PathVector({chain[0]: 1})
    assert pair_to_function(b2, [y, x], [0, "1/2", 1]) == PathVector({x: F(1, 2), y: F(1, 2)})
    a1 = fixtures.a1_bond3()
    path = PathVector({"e": F(1, 3), "s": F(2, 3)})
    assert function_to_pair(a1, path) == (("s", "e"), (0, F(2, 3), 1))


@pytest.mark.parametrize("sigmas, times, error", [
    (["x", "y"], [0, "1/2", 1], MalformedPair),
    (["y", "x"], [0, 1], MalformedPair),
    (["y", "x"], ["1/4", "1/2", 1], MalformedPair),
    (["y", "x"], [0, "1/2", "1/2"], MalformedPair),
    ([], [0], MalformedPair),
    (["y", "x"], [0, "1/3", 1], NotAnLSPath),
])
def test_pair_presentation_errors(chain12, sigmas, times, error):
    with pytest.raises(error):
        pair_to_function(chain12, sigmas, times)


@pytest.mark.parametrize("name", sorted(fixtures.FIXTURES))
def test_pair_presentation_round_trip(name):
    poset = fixtures.FIXTURES[name]()
    for p in enumerate_paths(poset, 1):
        sigmas, times = function_to_pair(poset, p)
        assert pair_to_function(poset, sigmas, times) == p

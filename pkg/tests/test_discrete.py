import itertools
import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from lsalgebra import fixtures
from lsalgebra.discrete import (
    AlgebraElement,
    StraighteningTable,
    WeightSystem,
    check_effective,
    discrete_straightening_table,
    ideal_basis_below,
    multiply_discrete,
    project_to_quotient,
    standard_order,
    verify_ls_axioms,
    weight_of,
)
from lsalgebra.errors import GcdConditionFailed, MissingEntry, NonStandardTarget, ParseError
from lsalgebra.grassmannian import epsilon_weights, straightening_table, table_matches_ring
from lsalgebra.paths import LSPath, canonical_form, enumerate_paths, extremal, ls_path
from lsalgebra.poset import subposet_below
from lsalgebra.vectors import PathVector

from conftest import ALL_FIXTURES


def P(**values):
    return PathVector({k: F(v) for k, v in values.items()})


def B(poset, **values):
    return AlgebraElement.basis(ls_path(poset, P(**values)))


def ext(label, r=1):
    return AlgebraElement.basis(extremal(label, r))


# -- elements ---------------------------------------------------------------------

def test_element_arithmetic(chain12):
    x = B(chain12, e=1) + B(chain12, y=1) * 3
    assert len(x) == 2 and x.degrees() == {1}
    assert (x - x).is_zero()
    assert x.coefficient(P(y=1)) == 3
    assert x.coefficient(P(x=1)) == 0
    mixed = x + ext("x", 2)
    assert mixed.component(2) == ext("x", 2)
    assert mixed.degrees() == {1, 2}
    assert AlgebraElement().is_zero()
    assert B(chain12, e=1) * 0 == AlgebraElement()


def test_element_json_round_trip(chain12):
    x = B(chain12, x="1/2", y="1/2") * F(-2, 3) + ext("e")
    obj = json.loads(json.dumps(x.to_json(chain12)))
    assert AlgebraElement.from_json(chain12, obj) == x
    with pytest.raises(ParseError):
        AlgebraElement.from_json(chain12, {"terms": [{"path": {"degree": 1}}]})


# -- multiplication -----------------------------------------------------------------

def test_multiply_examples(i24, chain12):
    assert multiply_discrete(i24, ext("14"), ext("23")).is_zero()
    half = B(chain12, x="1/2", y="1/2")
    assert multiply_discrete(chain12, half, half) == B(chain12, x=1, y=1)
    assert canonical_form(chain12, [P(x="1/2", y="1/2")] * 2) == [P(x=1), P(y=1)]
    assert multiply_discrete(i24, ext("13"), ext("13")) == ext("13", 2)
    prod = multiply_discrete(i24, ext("13") + ext("14"), ext("23"))
    assert prod == AlgebraElement.basis(LSPath({"13": 1, "23": 1}))
    with pytest.raises(GcdConditionFailed):
        multiply_discrete(fixtures.bad_diamond(), ext("0"), ext("1"))


def _products(poset, paths, k):
    out = []
    for combo in itertools.product(paths, repeat=k):
        acc = AlgebraElement.basis(combo[0])
        for p in combo[1:]:
            acc = multiply_discrete(poset, acc, AlgebraElement.basis(p))
        out.append((combo, acc))
    return out


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_associative_and_commutative(name):
    poset = fixtures.FIXTURES[name]()
    gens = [AlgebraElement.basis(p) for p in enumerate_paths(poset, 1)]
    for a, b in itertools.product(gens, repeat=2):
        assert multiply_discrete(poset, a, b) == multiply_discrete(poset, b, a)
    for a, b, c in itertools.product(gens, repeat=3):
        left = multiply_discrete(poset, multiply_discrete(poset, a, b), c)
        right = multiply_discrete(poset, a, multiply_discrete(poset, b, c))
        assert left == right


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_grading(name):
    poset = fixtures.FIXTURES[name]()
    for r1, r2 in [(1, 1), (1, 2)]:
        for p, q in itertools.product(enumerate_paths(poset, r1), enumerate_paths(poset, r2)):
            prod = multiply_discrete(poset, AlgebraElement.basis(p), AlgebraElement.basis(q))
            if not prod.is_zero():
                assert prod.degrees() == {r1 + r2}


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_products_of_generators_span_each_degree(name):
    # every degree-r path is a product of its canonical factors
    poset = fixtures.FIXTURES[name]()
    paths = enumerate_paths(poset, 1)
    reached = {next(iter(x))[0] for _, x in _products(poset, paths, 2) if not x.is_zero()}
    assert reached == set(enumerate_paths(poset, 2))


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_quotient_compatibility(name):
    poset = fixtures.FIXTURES[name]()
    for tau in poset.elements:
        sub = subposet_below(poset, tau)
        for p, q in itertools.product(enumerate_paths(poset, 1), repeat=2):
            x, y = AlgebraElement.basis(p), AlgebraElement.basis(q)
            lhs = project_to_quotient(poset, multiply_discrete(poset, x, y), tau)
            rhs = multiply_discrete(sub, project_to_quotient(poset, x, tau), project_to_quotient(poset, y, tau))
            assert lhs == rhs


small_coeff = st.integers(-3, 3)


@pytest.mark.parametrize("name", ["chain-12", "chain-121", "chain-33", "a1-bond3"])
@given(data=st.data())
def test_chain_algebras_have_no_zero_divisors(name, data):
    poset = fixtures.FIXTURES[name]()
    paths = enumerate_paths(poset, 1) + enumerate_paths(poset, 2)
    elements = []
    for _ in range(2):
        coeffs = data.draw(st.lists(small_coeff, min_size=len(paths), max_size=len(paths)))
        x = AlgebraElement(zip(paths, coeffs))
        if x.is_zero():
            x = AlgebraElement.basis(paths[0])
        elements.append(x)
    assert not multiply_discrete(poset, *elements).is_zero()


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_zero_divisors_iff_incomparable_elements(name):
    poset = fixtures.FIXTURES[name]()
    incomparable = [(a, b) for a, b in itertools.combinations(poset.elements, 2)
                    if not poset.leq(a, b) and not poset.leq(b, a)]
    zero_products = [(a, b) for a, b in itertools.combinations(poset.elements, 2)
                     if multiply_discrete(poset, ext(a), ext(b)).is_zero()]
    assert zero_products == incomparable


# -- weights ---------------------------------------------------------------------------

def test_weight_examples(i24, a1):
    eps = epsilon_weights(2, 4)
    assert weight_of(eps, P(**{"13": 1})) == ((1, 0, 1, 0), True)
    ws = WeightSystem({"e": 3, "s": -3})
    assert weight_of(ws, P(e="2/3", s="1/3")) == ((F(1),), True)
    assert weight_of(ws, P(e="1/2", s="1/2")) == ((F(0),), True)
    assert weight_of(WeightSystem({"e": 1, "s": 0}), P(e="1/3", s="2/3")) == ((F(1, 3),), False)
    with pytest.raises(ValueError):
        WeightSystem({"e": 1, "s": (0, 1)})


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_weights_are_additive(name):
    poset = fixtures.FIXTURES[name]()
    ws = WeightSystem({s: (i, i * i) for i, s in enumerate(poset.elements)})
    paths = enumerate_paths(poset, 1)
    for p, q in itertools.product(paths, repeat=2):
        if poset.is_chain(p.support | q.support):
            wp, wq = weight_of(ws, p)[0], weight_of(ws, q)[0]
            assert weight_of(ws, p + q)[0] == tuple(a + b for a, b in zip(wp, wq))


def test_effectiveness(i24, a1):
    assert check_effective(i24, epsilon_weights(2, 4), 3).effective
    assert check_effective(a1, WeightSystem({"e": 3, "s": -3}), 3).effective
    report = check_effective(i24, WeightSystem({s: 0 for s in i24.elements}), 1)
    assert not report.effective
    assert {s for s, _, _ in report.collisions} == set(i24.elements)


# -- ideals ----------------------------------------------------------------------------------

def test_ideal_basis_examples(i24):
    assert ideal_basis_below(i24, "24", 1) == [P(**{"34": 1})]
    assert ideal_basis_below(i24, "34", 2) == []
    assert set(ideal_basis_below(i24, "12", 1)) == {P(**{s: 1}) for s in i24.elements if s != "12"}


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_ideal_and_quotient_partition_the_basis(name):
    poset = fixtures.FIXTURES[name]()
    for tau in poset.elements:
        for r in (1, 2):
            ideal = set(ideal_basis_below(poset, tau, r))
            kept = set(enumerate_paths(subposet_below(poset, tau), r))
            assert ideal.isdisjoint(kept)
            assert ideal | kept == set(enumerate_paths(poset, r))


# -- straightening tables and the axioms ---------------------------------------------------

@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_discrete_table_passes(name):
    poset = fixtures.FIXTURES[name]()
    report = verify_ls_axioms(poset, discrete_straightening_table(poset))
    assert report.ok, report.failures


def test_standard_order(i24):
    assert standard_order(i24, extremal("24"), extremal("13")) == (extremal("13"), extremal("24"))
    assert standard_order(i24, extremal("14"), extremal("23")) is None


def test_grassmann_table_passes_with_weights(i24):
    table = straightening_table(2, 4)
    report = verify_ls_axioms(i24, table, epsilon_weights(2, 4))
    assert report.ok and report.checked == 1
    assert table.get(extremal("23"), extremal("14")) == {
        (extremal("13"), extremal("24")): 1, (extremal("12"), extremal("34")): -1}


def test_missing_entry_and_non_standard_target(i24):
    table = StraighteningTable(i24)
    with pytest.raises(MissingEntry):
        verify_ls_axioms(i24, table)
    table.set((extremal("14"), extremal("23")), [((extremal("14"), extremal("23")), 1)])
    with pytest.raises(NonStandardTarget):
        verify_ls_axioms(i24, table)


def test_corrupted_table_satisfies_axioms_but_not_the_ring(i24):
    table = StraighteningTable(i24)
    table.set((extremal("14"), extremal("23")), [((extremal("12"), extremal("34")), 1)])
    assert verify_ls_axioms(i24, table, epsilon_weights(2, 4)).ok
    assert len(table_matches_ring(2, 4, table)) == 1


def test_order_violation_is_reported(i24):
    table = StraighteningTable(i24)
    table.set((extremal("14"), extremal("23")), [((extremal("12"), extremal("13")), 1)])
    report = verify_ls_axioms(i24, table)
    assert not report.ok
    assert any(f.startswith("LS2") for f in report.failures)


def test_weight_violation_is_reported(i24):
    table = StraighteningTable(i24)
    table.set((extremal("14"), extremal("23")), [((extremal("13"), extremal("34")), 1)])
    report = verify_ls_axioms(i24, table, epsilon_weights(2, 4))
    assert any(f.startswith("weights") for f in report.failures)


def test_canonical_coefficient_strictness(chain12):
    half = ls_path(chain12, P(x="1/2", y="1/2"))
    table = StraighteningTable(chain12)
    table.set((half, half), [((extremal("x"), extremal("y")), 2)])
    strict = verify_ls_axioms(chain12, table)
    assert not strict.ok and "coefficient 2" in strict.failures[0]
    lenient = verify_ls_axioms(chain12, table, strict=False)
    assert lenient.ok and "coefficient 2" in lenient.notes[0]
    table.set((half, half), [])
    assert any("missing" in f for f in verify_ls_axioms(chain12, table, strict=False).failures)


def test_table_json_round_trip(tmp_path, i24):
    table = straightening_table(2, 4)
    path = tmp_path / "table.json"
    table.dump(str(path))
    assert StraighteningTable.load(i24, str(path)) == table
    assert StraighteningTable.from_json(i24, json.loads(path.read_text())) == table
    path.write_text("not json")
    with pytest.raises(ParseError):
        StraighteningTable.load(i24, str(path))
    with pytest.raises(ParseError):
        StraighteningTable.from_json(i24, [{"lhs": []}])

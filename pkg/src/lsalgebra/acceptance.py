"""End-to-end acceptance checks, each with an independent oracle and a time limit."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations_with_replacement
from typing import Callable, Sequence

from . import fixtures
from .discrete import AlgebraElement, StraighteningTable, multiply_discrete, verify_ls_axioms
from .errors import LSError
from .grassmannian import (
    chain_valuation,
    grassmann_poset,
    quasi_valuation_grassmann,
    straighten,
    straightening_table,
    table_matches_ring,
    to_polynomial,
    verify_grassmann_ls,
)
from .order_complex import lattice_level_points, verify_integral_structure
from .orders import Cmp, default_extension, linear_extensions, rlex_compare, rlex_key, rlex_min, triangle_compare
from .paths import LSPath, comparable_supports, decompose_degree_one, enumerate_paths, is_ls_path, is_standard
from .poset import BondedPoset, find_isomorphism, maximal_chains, verify_gcd_condition
from .valuation import discrete_value_sets, estimate_holds, newton_okounkov_levels
from .vectors import PathVector
from .weyl import build_root_system, bruhat_poset, weyl_dimension

GOLDEN_TABLE = "g24_straightening.json"


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float
    limit: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.name} ({self.seconds:.2f}s / {self.limit:.0f}s) {self.detail}".rstrip()


@dataclass
class AcceptanceConfig:
    quick: bool = False
    straightening_table: str | None = None
    seed: int = 20240611
    only: Sequence[int] = field(default_factory=tuple)


class _Failure(Exception):
    pass


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise _Failure(message)


# -- 1: path-model counts ---------------------------------------------------------

COUNT_CASES = [
    ("A1", (3,), 1, 4),
    ("B2", (1, 0), 1, 5),
    ("A2", (1, 1), 1, 8),
    ("A3", (0, 1, 0), 1, 6),
    ("A2", (1, 1), 2, 27),
    ("A3", (0, 1, 0), 2, 20),
    ("A3", (0, 1, 0), 3, 50),
]


def path_model_counts(cfg: AcceptanceConfig) -> str:
    cases = [c for c in COUNT_CASES if not cfg.quick or c[2] <= 2]
    for name, weight, r, expected in cases:
        rs = build_root_system(name)
        count = len(enumerate_paths(bruhat_poset(rs, weight), r))
        dim = weyl_dimension(rs, tuple(r * w for w in weight))
        _require(count == dim == expected, f"{name} {weight} r={r}: |LS|={count}, dim={dim}, expected {expected}")
    return f"{len(cases)} cases"


# -- 2: bonds from root data ---------------------------------------------------------

def bond_generation(cfg: AcceptanceConfig) -> str:
    b2 = bruhat_poset(build_root_system("B2"), (1, 0))
    chain = maximal_chains(b2)
    _require(len(chain) == 1 and len(chain[0]) == 4, "B2, omega_1 is not a 4-chain")
    bonds = [b2.bond(a, b) for a, b in zip(chain[0], chain[0][1:])]
    _require(bonds == [1, 2, 1], f"B2 bonds are {bonds}")
    a3 = bruhat_poset(build_root_system("A3"), (0, 1, 0))
    _require(find_isomorphism(a3, fixtures.i24()) is not None, "A3, omega_2 is not isomorphic to I(2,4)")
    _require(set(a3.bonds.values()) == {1}, "A3, omega_2 has a bond other than 1")
    generated = [bruhat_poset(build_root_system(n), w) for n, w, _, _ in COUNT_CASES]
    generated += [bruhat_poset(build_root_system("G2"), (1, 0)), bruhat_poset(build_root_system("C3"), (0, 1, 0))]
    _require(all(verify_gcd_condition(p).ok for p in generated), "a generated poset fails the gcd condition")
    return f"{len(generated)} generated posets pass the gcd condition"


# -- 3: straightening and LS2 -------------------------------------------------------------

def _load_table(cfg: AcceptanceConfig) -> StraighteningTable:
    poset = grassmann_poset(2, 4)
    if cfg.straightening_table:
        return StraighteningTable.load(poset, cfg.straightening_table)
    with resources.as_file(resources.files("lsalgebra") / "data" / GOLDEN_TABLE) as path:
        return StraighteningTable.load(poset, str(path))


def straightening_ls2(cfg: AcceptanceConfig) -> str:
    poset = grassmann_poset(2, 4)
    expansion = straighten(2, 4, ["14", "23"])
    lhs = PathVector({"14": 1, "23": 1})
    _require(len(expansion) == 2, f"14*23 has {len(expansion)} standard terms")
    for path, _ in expansion:
        _require(triangle_compare(poset, lhs, path) is Cmp.LT, f"term {path} is not above 14 + 23")
        for factor in ("14", "23"):
            top = decompose_degree_one(poset, path)[1]
            _require(triangle_compare(poset, PathVector({factor: 1}), top) is Cmp.LT,
                     f"{factor} is not strictly below {top}")
    golden = _load_table(cfg)
    _require(golden.to_json() == straightening_table(2, 4).to_json(), "the G(2,4) table fixture differs from the solver")
    _require(not table_matches_ring(2, 4, golden), "the G(2,4) table fixture does not hold in the ring")
    report = verify_ls_axioms(poset, golden)
    _require(report.ok, "; ".join(report.failures))
    table = straightening_table(2, 5)
    report = verify_ls_axioms(grassmann_poset(2, 5), table)
    _require(report.ok, "; ".join(report.failures))
    _require(not table_matches_ring(2, 5, table), "a G(2,5) relation does not hold in the ring")
    return f"G(2,5): {report.checked} nonstandard pairs"


# -- 4: standard monomial basis ---------------------------------------------------------------

def standard_monomial_basis(cfg: AcceptanceConfig) -> str:
    out = []
    for d, n, expected in [(2, 4, 20), (2, 5, None)]:
        report = verify_grassmann_ls(d, n, 2)
        count, rank = report.counts[2], report.ranks[2]
        _require(count == rank, f"G({d},{n}) degree 2: {count} monomials but rank {rank}")
        _require(expected is None or count == expected, f"G({d},{n}) has {count} standard monomials")
        _require(report.ok, f"G({d},{n}) verification failed")
        out.append(f"G({d},{n}): {count}")
    return ", ".join(out)


# -- 5: chain valuations -----------------------------------------------------------------------

def _random_element(rng: random.Random, paths: list[LSPath]) -> AlgebraElement:
    chosen = rng.sample(paths, rng.randint(1, min(3, len(paths))))
    return AlgebraElement((p, rng.choice([-3, -2, -1, 1, 2, 3])) for p in chosen)


def chain_valuations(cfg: AcceptanceConfig) -> str:
    poset = grassmann_poset(2, 4)
    chains = maximal_chains(poset)
    _require(len(chains) == 2, "I(2,4) should have two maximal chains")
    for chain in chains:
        for s in chain:
            value = chain_valuation(2, 4, AlgebraElement.basis(LSPath({s: 1})), chain)
            _require(value == PathVector({s: 1}), f"nu_C({s}) = {value} on {chain}")
        zero = rlex_key(PathVector(), chain)
        for r in (1, 2):
            for p in enumerate_paths(poset, r):
                value = chain_valuation(2, 4, AlgebraElement.basis(p), chain)
                _require(rlex_key(value, chain) > zero, f"nu_C({p}) = {value} is not positive")
    rng = random.Random(cfg.seed)
    by_degree = {r: enumerate_paths(poset, r) for r in (1, 2)}
    for _ in range(50):
        x = _random_element(rng, by_degree[rng.randint(1, 2)])
        y = _random_element(rng, by_degree[rng.randint(1, 2)])
        px, py = to_polynomial(2, 4, x), to_polynomial(2, 4, y)
        for chain in chains:
            a, b = chain_valuation(2, 4, px, chain), chain_valuation(2, 4, py, chain)
            c = chain_valuation(2, 4, px * py, chain)
            _require(a + b == c, f"nu_C(xy) = {c} but nu_C(x) + nu_C(y) = {a + b}")
    return "50 random products additive on both chains"


# -- 6: the estimate ---------------------------------------------------------------------------

def estimate(cfg: AcceptanceConfig) -> str:
    checked = 0
    for d, n in [(2, 4), (2, 5)]:
        poset = grassmann_poset(d, n)
        for chain in maximal_chains(poset):
            for p in enumerate_paths(poset, 1):
                value = chain_valuation(d, n, AlgebraElement.basis(p), chain)
                ok, case = estimate_holds(poset, chain, p, value)
                _require(ok, f"G({d},{n}) {p} on {chain}: case ({case}) fails with value {value}")
                checked += 1
    return f"{checked} (element, chain) pairs"


# -- 7: quasi-valuation and degeneration ------------------------------------------------------------

def quasi_valuation(cfg: AcceptanceConfig) -> str:
    poset = grassmann_poset(2, 4)
    ext = default_extension(poset)
    for s in poset.elements:
        value = quasi_valuation_grassmann(2, 4, AlgebraElement.basis(LSPath({s: 1})))
        _require(value == PathVector({s: 1}), f"nu(p_{s}) = {value}")
    nu = quasi_valuation_grassmann(2, 4, straighten(2, 4, ["14", "23"]))
    _require(nu == PathVector({"13": 1, "24": 1}), f"nu(p14 p23) = {nu}")
    _require(rlex_compare(nu, PathVector({"14": 1, "23": 1}), ext) is Cmp.GT, "nu(p14 p23) is not above 14 + 23")
    gens = enumerate_paths(poset, 1)
    for a, b in combinations_with_replacement(gens, 2):
        labels = [next(iter(a.support)), next(iter(b.support))]
        expansion = straighten(2, 4, labels)
        discrete = multiply_discrete(poset, AlgebraElement.basis(a), AlgebraElement.basis(b))
        leading = rlex_min((p for p, _ in expansion), ext)
        if comparable_supports(poset, (a, b)):
            _require(expansion == discrete, f"{labels}: {expansion} is not the discrete product")
        else:
            _require(discrete.is_zero(), f"{labels}: discrete product should vanish")
            _require(all(triangle_compare(poset, a + b, p) is Cmp.LT for p, _ in expansion),
                     f"{labels}: a term of the expansion is not above {a + b}")
        _require(quasi_valuation_grassmann(2, 4, expansion) == leading,
                 f"{labels}: quasi-valuation differs from the leading term {leading}")
    return "21 degree-2 products"


# -- 8: Newton-Okounkov levels vs the order complex -----------------------------------------------

def newton_okounkov_body(cfg: AcceptanceConfig) -> str:
    r_max = 2 if cfg.quick else 4
    for poset in (fixtures.i24(), fixtures.chain_121()):
        levels = newton_okounkov_levels(discrete_value_sets(poset, r_max))
        for r in range(1, r_max + 1):
            _require(levels[r] == lattice_level_points(poset, r), f"level {r} differs from Delta_{r}(S)")
            for chain in maximal_chains(poset):
                _require(verify_integral_structure(poset, chain, r), f"integral structure fails on {chain}, r={r}")
    return f"r <= {r_max}"


# -- 9: order oracle ---------------------------------------------------------------------------

def _oracle_compare(v: PathVector, w: PathVector, exts: list[tuple[str, ...]]) -> Cmp:
    results = {rlex_compare(v, w, e) for e in exts}
    return results.pop() if len(results) == 1 else Cmp.INCOMPARABLE


def small_fixtures() -> list[tuple[str, BondedPoset]]:
    return [(name, make()) for name, make in fixtures.FIXTURES.items() if len(make()) <= 7]


def order_oracle(cfg: AcceptanceConfig) -> str:
    pairs = 0
    for name, poset in small_fixtures():
        exts = linear_extensions(poset)
        vectors = [p for r in (1, 2) for p in enumerate_paths(poset, r)]
        for v in vectors:
            for w in vectors:
                got, want = triangle_compare(poset, v, w), _oracle_compare(v, w, exts)
                _require(got is want, f"{name}: {v} vs {w} gives {got}, extensions give {want}")
                pairs += 1
    return f"{pairs} pairs"


# -- 10: decomposition -----------------------------------------------------------------------------

def brute_force_factorisations(poset: BondedPoset, path: PathVector, gens: list[LSPath]) -> list[tuple[LSPath, ...]]:
    """Every standard sequence of degree-1 paths summing to ``path``."""
    r = int(path.total())
    found: list[tuple[LSPath, ...]] = []

    def grow(prefix: list[LSPath], rest: PathVector) -> None:
        if len(prefix) == r:
            if rest.is_zero():
                found.append(tuple(prefix))
            return
        for g in gens:
            if prefix and not is_standard(poset, (prefix[-1], g)):
                continue
            left = rest - g
            if all(v >= 0 for _, v in left.items()):
                prefix.append(g)
                grow(prefix, left)
                prefix.pop()

    grow([], path)
    return found


def decomposition(cfg: AcceptanceConfig) -> str:
    r_max = 2 if cfg.quick else 4
    checked = 0
    for name, make in fixtures.FIXTURES.items():
        poset = make()
        gens = enumerate_paths(poset, 1)
        for r in range(1, r_max + 1):
            for p in enumerate_paths(poset, r):
                factors = decompose_degree_one(poset, p)
                _require(all(is_ls_path(poset, f, 1) for f in factors), f"{name}: bad factor in {factors}")
                _require(is_standard(poset, factors), f"{name}: {factors} is not standard")
                _require(sum(factors, PathVector()) == p, f"{name}: factors of {p} do not sum to it")
                oracle = brute_force_factorisations(poset, p, gens)
                _require(oracle == [tuple(factors)], f"{name}: oracle finds {oracle} for {p}")
                checked += 1
    return f"{checked} paths"


CRITERIA: list[tuple[int, str, float, Callable[[AcceptanceConfig], str]]] = [
    (1, "path-model counts match the Weyl dimension formula", 10, path_model_counts),
    (2, "bonds generated from root data", 5, bond_generation),
    (3, "straightening relations satisfy LS2", 30, straightening_ls2),
    (4, "standard monomials form a basis", 60, standard_monomial_basis),
    (5, "chain valuations: normalisation, positivity, additivity", 120, chain_valuations),
    (6, "estimate for degree-1 elements", 120, estimate),
    (7, "quasi-valuation and degeneration to the discrete algebra", 60, quasi_valuation),
    (8, "Newton-Okounkov levels equal the order complex levels", 30, newton_okounkov_body),
    (9, "partial order agrees with all linear extensions", 60, order_oracle),
    (10, "canonical decomposition matches brute force", 60, decomposition),
]


def run_criterion(number: int, cfg: AcceptanceConfig | None = None) -> CriterionResult:
    cfg = cfg or AcceptanceConfig()
    num, name, limit, check = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    try:
        detail, passed = check(cfg), True
    except _Failure as exc:
        detail, passed = str(exc), False
    except LSError as exc:
        detail, passed = f"{exc.code}: {exc}", False
    seconds = time.perf_counter() - start
    if passed and seconds > limit:
        passed, detail = False, f"took longer than {limit}s; {detail}"
    return CriterionResult(num, name, passed, seconds, limit, detail)


def run_acceptance_suite(cfg: AcceptanceConfig | None = None) -> list[CriterionResult]:
    cfg = cfg or AcceptanceConfig()
    numbers = [c[0] for c in CRITERIA if not cfg.only or c[0] in cfg.only]
    return [run_criterion(n, cfg) for n in numbers]

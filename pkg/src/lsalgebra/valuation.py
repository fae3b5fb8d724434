"""Chain projections, the discrete quasi-valuation, an estimate checker, and levels."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .discrete import AlgebraElement
from .errors import MissingChain, MissingValue, NoSuchElement, ValuationError, ZeroElement
from .orders import default_extension, rlex_key, rlex_min
from .paths import LSPath, enumerate_paths, max_supp
from .poset import BondedPoset, lcm_bonds, maximal_chains
from .vectors import PathVector

Chain = tuple[str, ...]


def _require_maximal(poset: BondedPoset, chain: Sequence[str]) -> Chain:
    seq = tuple(chain)
    if not poset.is_maximal_chain(seq):
        raise ValuationError(f"{seq} is not a maximal chain")
    return seq


def nu_zero(poset: BondedPoset, chain: Sequence[str], path: PathVector) -> PathVector:
    """Move every coordinate of ``path`` to the chain element of the same length."""
    seq = _require_maximal(poset, chain)
    out = PathVector()
    for s, v in path.items():
        out = out + PathVector({seq[poset.length_of[s]]: v})
    return out


def h_index(poset: BondedPoset, chain: Sequence[str], path: PathVector) -> int:
    """-1 if supp lies on the chain, else the first position strictly above the off-chain part."""
    seq = _require_maximal(poset, chain)
    off = path.support - set(seq)
    if not off:
        return -1
    top = max_supp(poset, PathVector({s: 1 for s in off}))
    for h, s in enumerate(seq):
        if poset.lt(top, s):
            return h
    raise NoSuchElement(f"no element of {seq} lies above {top}")


def quasi_valuation_discrete(poset: BondedPoset, x: AlgebraElement,
                             ext: Sequence[str] | None = None) -> LSPath:
    """nu(sum c_pi pi) = the reverse-lex smallest pi with c_pi != 0."""
    if x.is_zero():
        raise ZeroElement("the quasi-valuation is undefined at 0")
    order = tuple(ext) if ext is not None else default_extension(poset)
    return rlex_min((p for p, _ in x), order)


@dataclass
class ChainValuationData:
    """Values of a valuation nu_C on selected inputs, all in Q^C."""

    poset: BondedPoset
    chain: Chain
    values: dict[PathVector, PathVector]

    def __post_init__(self):
        self.chain = _require_maximal(self.poset, self.chain)
        on_chain = set(self.chain)
        for key, value in self.values.items():
            if not value.support <= on_chain:
                raise ValuationError(f"value of {key} leaves the chain")
            if key.support <= on_chain and len(key.support) == 1 and key.total() == 1 and value != key:
                raise ValuationError(f"nu_C({key}) must be {key} itself")
            if not _positive(value, self.chain):
                raise ValuationError(f"value {value} of {key} is not positive")


def _positive(value: PathVector, chain: Chain) -> bool:
    zero = rlex_key(PathVector(), chain)
    return rlex_key(value, chain) > zero


@dataclass
class EstimateReport:
    ok: bool
    checked: int
    cases: dict[str, str] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)


def estimate_holds(poset: BondedPoset, chain: Sequence[str], path: PathVector, value: PathVector) -> tuple[bool, str]:
    """Case (a) on-chain: value == path.  Case (b) otherwise: the residual
    value - nu_0(path) - sigma_h / M_{sigma_h}, cut down to sigma_h..sigma_N,
    is >= 0 in reverse-lex (coordinates below sigma_h are free)."""
    seq = _require_maximal(poset, chain)
    h = h_index(poset, seq, path)
    if h == -1:
        return value == path, "a"
    head = seq[h]
    residual = value - nu_zero(poset, seq, path) - PathVector({head: Fraction(1, lcm_bonds(poset, head))})
    upper = seq[h:]
    cut = residual.restrict(upper)
    return rlex_key(cut, upper) >= rlex_key(PathVector(), upper), "b"


def check_estimate(poset: BondedPoset, data: ChainValuationData, paths: Iterable[PathVector]) -> EstimateReport:
    report = EstimateReport(True, 0)
    for p in paths:
        if p not in data.values:
            raise MissingValue(f"no value supplied for {p}")
        ok, case = estimate_holds(poset, data.chain, p, data.values[p])
        report.checked += 1
        report.cases[str(p)] = case
        if not ok:
            report.ok = False
            report.violations.append(f"{p}: value {data.values[p]} fails case ({case})")
    return report


def min_over_chains(poset: BondedPoset, per_chain: Mapping[Chain, PathVector],
                    ext: Sequence[str] | None = None) -> PathVector:
    """Reverse-lex minimum of the chain values; every maximal chain must be present."""
    missing = [c for c in maximal_chains(poset) if c not in per_chain]
    if missing:
        raise MissingChain(f"no value for chain {missing[0]}")
    order = tuple(ext) if ext is not None else default_extension(poset)
    return rlex_min(per_chain.values(), order)


def newton_okounkov_levels(value_sets: Mapping[int, Iterable[PathVector]]) -> dict[int, set[PathVector]]:
    levels = {}
    for r, values in value_sets.items():
        if r < 1:
            raise ValueError("levels start at r = 1")
        levels[r] = {PathVector(v.items()) / r for v in values}
    return levels


def discrete_value_sets(poset: BondedPoset, r_max: int, ext: Sequence[str] | None = None) -> dict[int, set[PathVector]]:
    """Images of the basis elements of each degree under the discrete quasi-valuation."""
    out = {}
    for r in range(1, r_max + 1):
        out[r] = {PathVector(quasi_valuation_discrete(poset, AlgebraElement.basis(p), ext).items())
                  for p in enumerate_paths(poset, r)}
    return out

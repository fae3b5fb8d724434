"""The homogeneous coordinate ring of G(d, n) as a computable LS algebra.

Pluecker coordinates are the maximal minors of a generic d x n matrix.  For an
index tau = (i_1 < ... < i_d) the pattern of tau lets row j use columns
1..i_j only; restricting functions to pattern matrices realises the quotient
by the ideal of coordinates not below tau.  On its own pattern p_tau is the
monomial x_{1 i_1} ... x_{d i_d}, which is what makes the valuation
recursion below effective.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from .discrete import (
    AlgebraElement,
    AxiomReport,
    StraighteningTable,
    WeightSystem,
    check_effective,
    verify_ls_axioms,
)
from .errors import BoundExceeded, NotInRing, ParseError, SolveFailed, TooLarge, ValuationError, ZeroElement
from .linalg import EchelonBasis
from .orders import default_extension, rlex_min
from .paths import LSPath, decompose_degree_one, enumerate_paths
from .poset import BondedPoset, build_poset, maximal_chains
from .polynomial import MinorPolynomial, determinant_minor
from .vectors import PathVector

MAX_ELEMENTS = 10**4
DEFAULT_MAX_DEGREE = 3

PlueckerIndex = tuple[int, ...]
Pattern = frozenset


# -- indices and the poset I(d, n) ---------------------------------------------

def index_label(tau: PlueckerIndex, n: int) -> str:
    return ("" if n <= 9 else ",").join(str(i) for i in tau)


def parse_index(label: str, d: int, n: int) -> PlueckerIndex:
    text = label.strip()
    try:
        parts = [int(p) for p in (text.split(",") if "," in text else text)]
    except ValueError:
        raise ParseError(f"cannot read a Pluecker index from {label!r}") from None
    tau = tuple(parts)
    if len(tau) != d or any(not 1 <= i <= n for i in tau) or any(a >= b for a, b in zip(tau, tau[1:])):
        raise ParseError(f"{label!r} is not an increasing {d}-subset of 1..{n}")
    return tau


def _check_sizes(d: int, n: int) -> None:
    if not 1 <= d < n:
        raise ValueError(f"need 1 <= d < n, got d={d}, n={n}")
    if comb(n, d) > MAX_ELEMENTS:
        raise TooLarge(f"G({d},{n}) has {comb(n, d)} Pluecker coordinates")


@lru_cache(maxsize=None)
def grassmann_poset(d: int, n: int) -> BondedPoset:
    """I(d, n) ordered componentwise; covers raise one entry by one, all bonds 1."""
    _check_sizes(d, n)
    subsets = list(itertools.combinations(range(1, n + 1), d))
    covers = []
    for tau in subsets:
        for j in range(d):
            up = list(tau)
            up[j] += 1
            if up[j] <= n and (j == d - 1 or up[j] < up[j + 1]):
                covers.append((index_label(tau, n), index_label(tuple(up), n), 1))
    return build_poset([index_label(t, n) for t in subsets], covers)


def top_index(d: int, n: int) -> PlueckerIndex:
    return tuple(range(n - d + 1, n + 1))


def pattern(tau: PlueckerIndex) -> Pattern:
    """Allowed entries (row, column): row j may use columns 1..i_j."""
    return frozenset((j + 1, c) for j, i in enumerate(tau) for c in range(1, i + 1))


def _pattern_or_full(d: int, n: int, patt: Pattern | None) -> Pattern:
    return patt if patt is not None else frozenset((r, c) for r in range(1, d + 1) for c in range(1, n + 1))


@lru_cache(maxsize=None)
def minor_polynomial(d: int, n: int, tau: PlueckerIndex, patt: Pattern | None = None) -> MinorPolynomial:
    """p_tau as the minor on columns tau; zero entries outside ``patt``."""
    return determinant_minor(d, n, tau, _pattern_or_full(d, n, patt))


def leading_monomial(d: int, n: int, tau: PlueckerIndex) -> tuple[int, ...]:
    """Exponents of x_{1 i_1} ... x_{d i_d}, which is p_tau on pattern(tau)."""
    e = [0] * (d * n)
    for j, i in enumerate(tau):
        e[j * n + (i - 1)] = 1
    return tuple(e)


# -- from algebra elements to polynomials -----------------------------------------

def _indices_of_path(d: int, n: int, path: PathVector) -> list[PlueckerIndex]:
    out = []
    for label, value in path.items():
        if value.denominator != 1:
            raise ParseError(f"{path} is not a basis path of G({d},{n})")
        out.extend([parse_index(label, d, n)] * int(value))
    return out


def monomial_polynomial(d: int, n: int, factors: Sequence[PlueckerIndex], patt: Pattern | None = None) -> MinorPolynomial:
    out = MinorPolynomial.constant(d, n)
    for tau in factors:
        out = out * minor_polynomial(d, n, tau, patt)
    return out


def to_polynomial(d: int, n: int, x: AlgebraElement | MinorPolynomial, patt: Pattern | None = None) -> MinorPolynomial:
    """Evaluate an element (basis paths = products of Pluecker coordinates) as a polynomial."""
    if isinstance(x, MinorPolynomial):
        return x.restrict(set(patt)) if patt is not None else x
    out = MinorPolynomial(d, n)
    for path, coeff in x:
        out = out + monomial_polynomial(d, n, _indices_of_path(d, n, path), patt) * coeff
    return out


def path_of_monomial(d: int, n: int, factors: Sequence[PlueckerIndex]) -> LSPath:
    acc: dict[str, int] = {}
    for tau in factors:
        label = index_label(tau, n)
        acc[label] = acc.get(label, 0) + 1
    return LSPath(acc)


# -- standard monomials --------------------------------------------------------

def _multichains(poset: BondedPoset, labels: Sequence[str], r: int) -> list[tuple[str, ...]]:
    """Weakly increasing sequences of length r in ``labels`` forming a chain."""
    out = []

    def grow(prefix: list[str]) -> None:
        if len(prefix) == r:
            out.append(tuple(prefix))
            return
        for s in labels:
            if not prefix or poset.leq(prefix[-1], s):
                prefix.append(s)
                grow(prefix)
                prefix.pop()

    grow([])
    return out


def _content(d: int, n: int, factors: Iterable[PlueckerIndex]) -> tuple[int, ...]:
    counts = [0] * n
    for tau in factors:
        for i in tau:
            counts[i - 1] += 1
    return tuple(counts)


@lru_cache(maxsize=None)
def standard_monomials(d: int, n: int, r: int, below: PlueckerIndex | None = None) -> tuple[tuple[PlueckerIndex, ...], ...]:
    """Multichains of length r in I(d, n), optionally restricted to indices <= ``below``."""
    poset = grassmann_poset(d, n)
    labels = list(poset.elements)
    if below is not None:
        keep = poset.down_set(index_label(below, n))
        labels = [s for s in labels if s in keep]
    return tuple(tuple(parse_index(s, d, n) for s in chain) for chain in _multichains(poset, labels, r))


@dataclass
class _SpanData:
    monomials: list[tuple[PlueckerIndex, ...]]
    basis: EchelonBasis


@lru_cache(maxsize=None)
def _span(d: int, n: int, r: int, content: tuple[int, ...], below: PlueckerIndex | None) -> _SpanData:
    patt = pattern(below) if below is not None else None
    monos = [m for m in standard_monomials(d, n, r, below) if _content(d, n, m) == content]
    basis = EchelonBasis()
    for m in monos:
        basis.add(monomial_polynomial(d, n, m, patt).terms)
    return _SpanData(monos, basis)


def expand_in_standard(d: int, n: int, poly: MinorPolynomial, r: int,
                       below: PlueckerIndex | None = None) -> dict[tuple[PlueckerIndex, ...], Fraction] | None:
    """Coefficients of ``poly`` in the standard monomials of degree r (on pattern(below)), or None.

    Standard monomials are weight vectors for the column torus, so the
    system splits into one small solve per column content.
    """
    if r < 0:
        return None
    parts: dict[tuple[int, ...], dict] = {}
    for e, c in poly.terms.items():
        content = tuple(sum(e[row * n + col] for row in range(d)) for col in range(n))
        parts.setdefault(content, {})[e] = c
    out: dict[tuple[PlueckerIndex, ...], Fraction] = {}
    for content, terms in parts.items():
        if sum(content) != d * r:
            return None
        data = _span(d, n, r, content, below)
        coeffs = data.basis.express(terms)
        if coeffs is None:
            return None
        out.update((data.monomials[i], c) for i, c in coeffs.items())
    return out


def straighten(d: int, n: int, monomial: Sequence[PlueckerIndex | str]) -> AlgebraElement:
    """The product of Pluecker coordinates written in the standard-monomial basis."""
    factors = [parse_index(t, d, n) if isinstance(t, str) else tuple(t) for t in monomial]
    poly = monomial_polynomial(d, n, factors)
    coeffs = expand_in_standard(d, n, poly, len(factors))
    if coeffs is None:
        raise SolveFailed(f"product {factors} is not in the span of standard monomials")
    return AlgebraElement((path_of_monomial(d, n, m), c) for m, c in coeffs.items())


def epsilon_weights(d: int, n: int) -> WeightSystem:
    """tau -> sum of e_i over i in tau."""
    poset = grassmann_poset(d, n)
    return WeightSystem({s: tuple(1 if i + 1 in parse_index(s, d, n) else 0 for i in range(n))
                         for s in poset.elements})


def straightening_table(d: int, n: int) -> StraighteningTable:
    poset = grassmann_poset(d, n)
    table = StraighteningTable(poset)
    for a, b in table.nonstandard_pairs():
        expansion = straighten(d, n, [parse_index(s, d, n) for s in (*a.support, *b.support)])
        rhs = []
        for path, c in expansion:
            rhs.append((tuple(decompose_degree_one(poset, path)), c))
        table.set((a, b), rhs)
    return table


def table_matches_ring(d: int, n: int, table: StraighteningTable) -> list[str]:
    """Entries whose two sides are different polynomials."""
    bad = []
    for (a, b), rhs in table.entries.items():
        factors = _indices_of_path(d, n, a) + _indices_of_path(d, n, b)
        lhs_poly = monomial_polynomial(d, n, factors)
        rhs_poly = MinorPolynomial(d, n)
        for (c1, c2), coeff in rhs.items():
            rhs_poly = rhs_poly + monomial_polynomial(
                d, n, _indices_of_path(d, n, c1) + _indices_of_path(d, n, c2)) * coeff
        if lhs_poly != rhs_poly:
            bad.append(f"[{a}]*[{b}]")
    return bad


@dataclass
class GrassmannReport:
    ok: bool
    counts: dict[int, int] = field(default_factory=dict)
    ranks: dict[int, int] = field(default_factory=dict)
    nonstandard_pairs: int = 0
    axioms: AxiomReport | None = None
    effective: bool = False
    ring_mismatches: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def verify_grassmann_ls(d: int, n: int, r_max: int = 2, table: StraighteningTable | None = None) -> GrassmannReport:
    """Basis, straightening and weight checks for the coordinate ring of G(d, n)."""
    poset = grassmann_poset(d, n)
    report = GrassmannReport(True)
    for r in range(1, r_max + 1):
        monos = standard_monomials(d, n, r)
        basis = EchelonBasis()
        for m in monos:
            basis.add(monomial_polynomial(d, n, m).terms)
        report.counts[r] = len(monos)
        report.ranks[r] = basis.rank
        if basis.rank != len(monos):
            report.ok = False
        if len(monos) != len(enumerate_paths(poset, r)):
            report.ok = False
            report.notes.append(f"degree {r}: standard monomials and LS paths disagree in number")
    if table is None:
        table = straightening_table(d, n)
    report.nonstandard_pairs = len(table.nonstandard_pairs())
    report.axioms = verify_ls_axioms(poset, table, epsilon_weights(d, n))
    report.ring_mismatches = table_matches_ring(d, n, table)
    report.effective = check_effective(poset, epsilon_weights(d, n), max(r_max, 1)).effective
    report.ok = report.ok and report.axioms.ok and not report.ring_mismatches and report.effective
    report.notes.append("all bonds are 1, so every degree-2 monomial with comparable supports is already "
                        "standard and the canonical-form axiom has no nontrivial instance")
    return report


# -- chain valuations ------------------------------------------------------------

def _as_element(d: int, n: int, x) -> tuple[MinorPolynomial, int]:
    if isinstance(x, MinorPolynomial):
        poly = x
        if poly.is_zero():
            raise ZeroElement("the valuation is undefined at 0")
        deg = poly.degree()
        if deg % d:
            raise NotInRing(f"degree {deg} is not a multiple of {d}")
        return poly, deg // d
    if x.is_zero():
        raise ZeroElement("the valuation is undefined at 0")
    degs = x.degrees()
    if len(degs) != 1:
        raise ValuationError("chain valuations are computed on homogeneous elements")
    return to_polynomial(d, n, x), degs.pop()


def _row_of_change(upper: PlueckerIndex, lower: PlueckerIndex) -> int:
    rows = [j for j in range(len(upper)) if upper[j] != lower[j]]
    assert len(rows) == 1
    return rows[0]


def chain_valuation(d: int, n: int, x: AlgebraElement | MinorPolynomial, chain: Sequence[str]) -> PathVector:
    """The valuation nu_C, computed top-down along the maximal chain C.

    At the step from sigma_h down to sigma_{h-1} (rows differ in row j), r is
    the order of x in the variable x_{j, i_j} cut out by the smaller pattern.
    We look for the least k such that p_{sigma_{h-1}}^k * x / p_{sigma_h}^r is
    a polynomial in the quotient ring of sigma_h, record
    r * sigma_h - k * sigma_{h-1}, and restrict to the pattern of sigma_{h-1}.
    At the bottom what remains must be a multiple of a power of p_{sigma_0}.
    """
    poset = grassmann_poset(d, n)
    seq = tuple(chain)
    if not poset.is_maximal_chain(seq):
        raise ValuationError(f"{seq} is not a maximal chain of I({d},{n})")
    idx = [parse_index(s, d, n) for s in seq]
    poly, deg = _as_element(d, n, x)
    poly = poly.restrict(set(pattern(idx[-1])))
    if expand_in_standard(d, n, poly, deg, idx[-1]) is None:
        raise NotInRing("the input is not a homogeneous element of the coordinate ring")
    bound = max(deg, 1) * (len(seq) - 1)
    result = PathVector()
    for h in range(len(seq) - 1, 0, -1):
        upper, lower = idx[h], idx[h - 1]
        j = _row_of_change(upper, lower)
        r = poly.min_exponent(j + 1, upper[j])
        if r > 0:
            divisor = tuple(r * e for e in leading_monomial(d, n, upper))
            p_lower = minor_polynomial(d, n, lower, pattern(upper))
            multiplier = MinorPolynomial.constant(d, n)
            for k in range(bound + 1):
                q = (multiplier * poly).divide_by_monomial(divisor)
                if q is not None and expand_in_standard(d, n, q, deg + k - r, upper) is not None:
                    break
                multiplier = multiplier * p_lower
            else:
                raise BoundExceeded(f"no k <= {bound} clears p_{seq[h]}^{r} at step {seq[h]} -> {seq[h - 1]}")
            poly, deg = q, deg + k - r
            result = result + PathVector({seq[h]: r}) - PathVector({seq[h - 1]: k})
        poly = poly.restrict(set(pattern(lower)))
        if poly.is_zero():
            raise NotInRing(f"the element vanishes identically at step {seq[h]} -> {seq[h - 1]}")
    base = MinorPolynomial.monomial(d, n, [(j + 1, i) for j, i in enumerate(idx[0])]) ** deg
    if poly.as_multiple_of(base) is None:
        raise NotInRing("what remains at the bottom of the chain is not a multiple of a power of p_bottom")
    return result + PathVector({seq[0]: deg})


def quasi_valuation_grassmann(d: int, n: int, x: AlgebraElement | MinorPolynomial,
                              ext: Sequence[str] | None = None) -> PathVector:
    """Reverse-lex minimum of the chain valuations over all maximal chains."""
    poset = grassmann_poset(d, n)
    order = tuple(ext) if ext is not None else default_extension(poset)
    return rlex_min((chain_valuation(d, n, x, c) for c in maximal_chains(poset)), order)


def element_from_json(d: int, n: int, obj: Mapping) -> AlgebraElement:
    """Accept either algebra-element JSON or {"monomial": ["14", "23"]}."""
    if isinstance(obj, Mapping) and "monomial" in obj:
        return straighten(d, n, [parse_index(str(t), d, n) for t in obj["monomial"]])
    return AlgebraElement.from_json(grassmann_poset(d, n), obj)


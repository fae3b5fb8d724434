"""LS paths over a bonded poset: validation, enumeration, canonical factorisation."""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .errors import (
    NonComparableSupports,
    NotAChain,
    NotAnLSPath,
    ParseError,
    WidthOne,
    ZeroPath,
)
from .poset import BondedPoset, extended_bond, lcm_bonds, maximal_chains
from .vectors import PathVector, Rational, format_fraction

log = logging.getLogger(__name__)


class LSPath(PathVector):
    """A validated LS path.  Use :func:`ls_path` to construct one."""

    __slots__ = ()

    @property
    def degree(self) -> int:
        return int(self.total())

    def to_json(self) -> dict:
        return {"degree": self.degree, "values": {k: format_fraction(v) for k, v in self.items()}}

    @classmethod
    def from_json(cls, obj: Mapping) -> "LSPath":
        raise TypeError("use path_from_json(poset, obj) so the path gets validated")


def _chain_values(poset: BondedPoset, values: Mapping[str, Fraction]) -> list[tuple[str, Fraction]]:
    labels = poset.sort_chain(values)
    return [(s, values[s]) for s in labels]


def is_ls_path(poset: BondedPoset, values: Mapping[str, Rational] | PathVector, degree: int) -> bool:
    """Check the three defining conditions of an LS path of the given degree."""
    vec = values if isinstance(values, PathVector) else PathVector(values)
    poset.check(*vec.support)
    if any(v < 0 for _, v in vec.items()):
        return False
    if vec.total() != degree:
        return False
    try:
        seq = _chain_values(poset, vec.as_dict())
    except NotAChain:
        return False
    running = Fraction(0)
    for (s, v), (t, _) in zip(seq, seq[1:]):
        running += v
        if (extended_bond(poset, s, t) * running).denominator != 1:
            return False
    return True


def ls_path(poset: BondedPoset, values: Mapping[str, Rational] | PathVector, degree: int | None = None) -> LSPath:
    """Validate ``values`` and return it as an :class:`LSPath`."""
    vec = values if isinstance(values, PathVector) else PathVector(values)
    total = vec.total()
    if degree is None:
        if total.denominator != 1:
            raise NotAnLSPath(f"{vec} has non-integral total {total}")
        degree = int(total)
    if not is_ls_path(poset, vec, degree):
        raise NotAnLSPath(f"{vec} is not an LS path of degree {degree}")
    return LSPath(vec.items())


def extremal(label: str, degree: int = 1) -> LSPath:
    return LSPath({label: degree})


def path_from_json(poset: BondedPoset, obj: Mapping) -> LSPath:
    if not isinstance(obj, Mapping) or "values" not in obj:
        raise ParseError("LS path JSON needs a 'values' object")
    vec = PathVector.from_json(obj)
    return ls_path(poset, vec, obj.get("degree"))


def sort_key(poset: BondedPoset, path: PathVector) -> tuple:
    """Deterministic ordering: degree, support in chain order, then values."""
    labels = sorted(path.support, key=lambda s: (poset.length_of[s], s))
    return (path.total(), tuple(labels), tuple(path[s] for s in labels))


def sorted_paths(poset: BondedPoset, paths: Iterable[PathVector]) -> list:
    return sorted(paths, key=lambda p: sort_key(poset, p))


def chain_bonds(poset: BondedPoset, chain: Sequence[str]) -> list[int]:
    return [extended_bond(poset, a, b) for a, b in zip(chain, chain[1:])]


def enumerate_on_chain(poset: BondedPoset, chain: Iterable[str], r: int) -> list[LSPath]:
    """LS_r(C), read off the integer points of the bond-scaled simplex over C.

    With tail sums t_j = sum_{i>=j} a_i, a function on C is in LS_r(C) exactly
    when r >= t_1 >= ... >= t_k >= 0 and n_j * t_j is an integer for the
    bonds n_j of consecutive chain elements.
    """
    if r < 0:
        raise ValueError("degree must be non-negative")
    seq = poset.sort_chain(chain)
    if r == 0:
        return [LSPath()]
    bonds = chain_bonds(poset, seq)
    k = len(bonds)
    out: list[LSPath] = []

    def walk(j: int, cap: Fraction, tails: list[Fraction]) -> None:
        if j == k:
            full = [Fraction(r)] + tails + [Fraction(0)]
            out.append(LSPath((seq[i], full[i] - full[i + 1]) for i in range(k + 1)))
            return
        n = bonds[j]
        for y in range(int(cap * n) + 1):
            tails.append(Fraction(y, n))
            walk(j + 1, Fraction(y, n), tails)
            tails.pop()

    walk(0, Fraction(r), [])
    return sorted_paths(poset, out)


def enumerate_paths(poset: BondedPoset, r: int) -> list[LSPath]:
    """All LS paths of degree r (union over maximal chains, deduplicated)."""
    seen: set[LSPath] = set()
    for chain in maximal_chains(poset):
        seen.update(enumerate_on_chain(poset, chain, r))
    return sorted_paths(poset, seen)


def width(poset: BondedPoset, path: PathVector) -> int:
    if path.is_zero():
        raise ZeroPath("the zero path has no width")
    lengths = [poset.length_of[s] for s in path.support]
    return max(lengths) - min(lengths) + 1


def min_supp(poset: BondedPoset, path: PathVector) -> str:
    return min(path.support, key=lambda s: (poset.length_of[s], s))


def max_supp(poset: BondedPoset, path: PathVector) -> str:
    return max(path.support, key=lambda s: (poset.length_of[s], s))


def is_standard(poset: BondedPoset, factors: Sequence[PathVector]) -> bool:
    """max supp of each factor <= min supp of the next one."""
    for a, b in zip(factors, factors[1:]):
        if a.is_zero() or b.is_zero():
            continue
        if not poset.leq(max_supp(poset, a), min_supp(poset, b)):
            return False
    return True


def comparable_supports(poset: BondedPoset, paths: Iterable[PathVector]) -> bool:
    union: set[str] = set()
    for p in paths:
        union |= p.support
    return poset.is_chain(union)


def _greedy_decomposition(seq: list[tuple[str, Fraction]], r: int) -> list[PathVector]:
    # factor h collects the mass lying in [h-1, h] when supp is laid out bottom-up
    factors: list[dict[str, Fraction]] = [dict() for _ in range(r)]
    start = Fraction(0)
    for label, value in seq:
        end = start + value
        h = int(start)
        while h < r and Fraction(h) < end:
            lo, hi = max(start, Fraction(h)), min(end, Fraction(h + 1))
            if hi > lo:
                factors[h][label] = factors[h].get(label, Fraction(0)) + (hi - lo)
            h += 1
        start = end
    return [PathVector(f) for f in factors]


def _search_decomposition(poset: BondedPoset, path: PathVector, r: int) -> list[PathVector] | None:
    chain = poset.sort_chain(path.support)
    pieces = [p for p in enumerate_on_chain(poset, chain, 1)]
    for combo in itertools.product(pieces, repeat=r):
        if is_standard(poset, combo) and sum(combo, PathVector()) == path:
            return list(combo)
    return None


def decompose_degree_one(poset: BondedPoset, path: PathVector) -> list[LSPath]:
    """The canonical (standard) factorisation of an LS path into degree-1 paths."""
    total = path.total()
    if total.denominator != 1 or not is_ls_path(poset, path, int(total)):
        raise NotAnLSPath(f"{path} is not an LS path")
    r = int(total)
    if r == 0:
        return []
    seq = _chain_values(poset, path.as_dict())
    factors = _greedy_decomposition(seq, r)
    if not (all(is_ls_path(poset, f, 1) for f in factors) and is_standard(poset, factors)):
        log.info("greedy factorisation failed for %s, falling back to search", path)
        found = _search_decomposition(poset, path, r)
        if found is None:
            raise NotAnLSPath(f"no standard factorisation of {path}")
        factors = found
    return [LSPath(f.items()) for f in factors]


def canonical_form(poset: BondedPoset, factors: Sequence[PathVector]) -> list[LSPath]:
    if not comparable_supports(poset, factors):
        raise NonComparableSupports("factors do not lie on a common chain")
    return decompose_degree_one(poset, sum(factors, PathVector()))


def split_head(poset: BondedPoset, path: PathVector) -> tuple[LSPath, LSPath]:
    """Split a degree-1 path of width >= 2 into (pi', pi'').

    pi' = (1 - a1) s1 + a1 s2 and pi'' = (a1 + a2) s2 + the rest of the path;
    the canonical form of pi' * pi is s1 * pi''.
    """
    if not is_ls_path(poset, path, 1):
        raise NotAnLSPath(f"{path} is not an LS path of degree 1")
    seq = _chain_values(poset, path.as_dict())
    if len(seq) < 2:
        raise WidthOne(f"{path} has a single support element")
    (s1, a1), (s2, a2) = seq[0], seq[1]
    first = ls_path(poset, {s1: 1 - a1, s2: a1}, 1)
    second = ls_path(poset, [(s2, a1 + a2)] + seq[2:], 1)
    return first, second


# -- the lattice L_C generated by LS(C) ------------------------------------

def _hermite_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix (zero rows dropped)."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis: list[list[int]] = []
    col = 0
    while rows and col < ncols:
        live = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not live:
            col += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            pivot = live[0]
            nxt = [pivot]
            for r in live[1:]:
                q = r[col] // pivot[col]
                red = [a - q * b for a, b in zip(r, pivot)]
                (nxt if red[col] != 0 else rest).append(red)
            live = nxt
        pivot = live[0]
        if pivot[col] < 0:
            pivot = [-a for a in pivot]
        basis.append(pivot)
        rows = [r for r in rest if any(r)]
        col += 1
    # reduce entries above each pivot into [0, pivot)
    for i, row in enumerate(basis):
        pc = next(c for c, a in enumerate(row) if a)
        for prev in basis[:i]:
            q = prev[pc] // row[pc]
            if q:
                for c in range(ncols):
                    prev[c] -= q * row[c]
    return basis


class ChainLattice:
    """The lattice L_C in Q^C spanned by LS(C), with a reduced Z-basis."""

    def __init__(self, chain: tuple[str, ...], basis: list[tuple[Fraction, ...]], scale: int):
        self.chain = chain
        self.basis = basis
        self._scale = scale
        self._hnf = [[int(v * scale) for v in row] for row in basis]

    def basis_vectors(self) -> list[PathVector]:
        return [PathVector(zip(self.chain, row)) for row in self.basis]

    def __contains__(self, vec: PathVector) -> bool:
        if not vec.support <= set(self.chain):
            return False
        target = [vec[s] * self._scale for s in self.chain]
        if any(v.denominator != 1 for v in target):
            return False
        rest = [int(v) for v in target]
        for row in self._hnf:
            pc = next(c for c, a in enumerate(row) if a)
            if rest[pc] % row[pc]:
                return False
            q = rest[pc] // row[pc]
            rest = [a - q * b for a, b in zip(rest, row)]
        return not any(rest)


def chain_lattice_basis(poset: BondedPoset, chain: Iterable[str]) -> ChainLattice:
    """Reduced basis of the lattice generated by LS(C), from the degree-1 generators."""
    seq = poset.sort_chain(chain)
    gens = enumerate_on_chain(poset, seq, 1)
    scale = lcm(*(lcm_bonds(poset, s) for s in seq))
    rows = [[int(g[s] * scale) for s in seq] for g in gens]
    hnf = _hermite_rows(rows)
    basis = [tuple(Fraction(a, scale) for a in row) for row in hnf]
    return ChainLattice(seq, basis, scale)

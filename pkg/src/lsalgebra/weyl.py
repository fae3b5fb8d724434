"""Finite root systems, Weyl orbits of dominant weights, and Bruhat posets with bonds.

Weights are stored by their Dynkin labels (mu, alpha_i^vee), roots by their
coordinates in the simple roots.  The invariant form is fixed by its Gram
matrix on the simple roots, with long roots of squared length 2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import MalformedPair, NotDominant, OrbitTooLarge, UnsupportedType
from .paths import LSPath, ls_path
from .poset import BondedPoset, build_poset, subposet_below
from .vectors import PathVector, Rational, as_fraction

MAX_WEYL_ORDER = 10**5
MAX_ORBIT = 10**5

Weight = tuple[int, ...]
Root = tuple[int, ...]


def _gram(kind: str, rank: int) -> list[list[Fraction]]:
    g = [[Fraction(0)] * rank for _ in range(rank)]
    for i in range(rank):
        g[i][i] = Fraction(2)

    def link(i: int, j: int, value: Rational) -> None:
        g[i][j] = g[j][i] = Fraction(value)

    if kind in ("A", "B", "C"):
        for i in range(rank - 1):
            link(i, i + 1, -1)
        if kind == "B":
            g[rank - 1][rank - 1] = Fraction(1)
            link(rank - 2, rank - 1, Fraction(-1))
        elif kind == "C":
            for i in range(rank - 1):
                g[i][i] = Fraction(1)
                if i < rank - 2:
                    link(i, i + 1, Fraction(-1, 2))
            link(rank - 2, rank - 1, -1)
    elif kind == "D":
        for i in range(rank - 2):
            link(i, i + 1, -1)
        link(rank - 3, rank - 1, -1)
    elif kind == "E":
        # Bourbaki numbering: 1-3-4-5-..., with 2 attached to 4
        for i, j in [(0, 2), (2, 3), (1, 3)] + [(k, k + 1) for k in range(3, rank - 1)]:
            link(i, j, -1)
    elif kind == "F":
        link(0, 1, -1)
        g[2][2] = g[3][3] = Fraction(1)
        link(1, 2, -1)
        link(2, 3, Fraction(-1, 2))
    elif kind == "G":
        g[0][0] = Fraction(2, 3)
        link(0, 1, -1)
    return g


def _weyl_order(kind: str, rank: int) -> int:
    if kind == "A":
        return factorial(rank + 1)
    if kind in "BC":
        return 2**rank * factorial(rank)
    if kind == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[(kind, rank)]


def _positive_root_count(kind: str, rank: int) -> int:
    if kind == "A":
        return rank * (rank + 1) // 2
    if kind in "BC":
        return rank * rank
    if kind == "D":
        return rank * (rank - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[(kind, rank)]


def _valid_type(kind: str, rank: int) -> bool:
    minimum = {"A": 1, "B": 2, "C": 2, "D": 4}
    if kind in minimum:
        return rank >= minimum[kind]
    return (kind, rank) in {("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)}


@dataclass(frozen=True)
class RootSystem:
    kind: str
    rank: int
    gram: tuple[tuple[Fraction, ...], ...]
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    def form(self, a: Sequence[Rational], b: Sequence[Rational]) -> Fraction:
        """(a, b) for vectors in simple-root coordinates."""
        return sum((Fraction(a[i]) * self.gram[i][j] * b[j]
                    for i in range(self.rank) for j in range(self.rank) if a[i] and b[j]), Fraction(0))

    def root_labels(self, root: Sequence[int]) -> Weight:
        """Dynkin labels of a vector given in simple-root coordinates."""
        return tuple(sum(root[i] * self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank))

    def coroot(self, root: Root) -> tuple[Fraction, ...]:
        norm = self.form(root, root)
        return tuple(2 * Fraction(c) / norm for c in root)

    def pair(self, weight: Sequence[Rational], root: Root) -> Fraction:
        """(mu, beta^vee) for mu given by Dynkin labels."""
        # (mu, alpha_j) = m_j * (alpha_j, alpha_j) / 2
        inner = sum((Fraction(weight[j]) * self.gram[j][j] / 2 * root[j] for j in range(self.rank)), Fraction(0))
        return 2 * inner / self.form(root, root)

    def reflect(self, weight: Weight, i: int) -> Weight:
        m = weight[i]
        return tuple(w - m * c for w, c in zip(weight, self.cartan[i]))

    def reflect_by(self, weight: Weight, root: Root) -> Weight:
        c = self.pair(weight, root)
        shift = self.root_labels(root)
        return tuple(int(w - c * s) for w, s in zip(weight, shift))

    def fundamental(self, i: int) -> Weight:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    @property
    def rho(self) -> Weight:
        return tuple([1] * self.rank)


def build_root_system(kind: str, rank: int | None = None) -> RootSystem:
    """Root data for a finite type, e.g. ``build_root_system("B", 2)`` or ``build_root_system("B2")``."""
    if rank is None:
        kind, rank = _split_name(kind)
    kind = kind.upper()
    if not _valid_type(kind, rank):
        raise UnsupportedType(f"no finite root system of type {kind}{rank}")
    if _weyl_order(kind, rank) > MAX_WEYL_ORDER:
        raise UnsupportedType(f"the Weyl group of {kind}{rank} exceeds {MAX_WEYL_ORDER} elements")
    gram = _gram(kind, rank)
    cartan = []
    for i in range(rank):
        row = []
        for j in range(rank):
            v = 2 * gram[i][j] / gram[j][j]
            assert v.denominator == 1
            row.append(int(v))
        cartan.append(tuple(row))
    rs = RootSystem(kind, rank, tuple(map(tuple, gram)), tuple(cartan), ())
    roots = _generate_roots(rs)
    positive = tuple(sorted((r for r in roots if all(c >= 0 for c in r)), key=lambda r: (sum(r), r)))
    if len(positive) != _positive_root_count(kind, rank):
        raise AssertionError(f"generated {len(positive)} positive roots for {kind}{rank}")
    return RootSystem(kind, rank, rs.gram, rs.cartan, positive)


def _split_name(name: str) -> tuple[str, int]:
    name = name.strip()
    try:
        return name[0].upper(), int(name[1:])
    except (IndexError, ValueError):
        raise UnsupportedType(f"cannot read a root system type from {name!r}") from None


def _generate_roots(rs: RootSystem) -> set[Root]:
    simple = [tuple(1 if j == i else 0 for j in range(rs.rank)) for i in range(rs.rank)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        root = queue.popleft()
        for i in range(rs.rank):
            c = 2 * rs.form(root, simple[i]) / rs.gram[i][i]
            image = tuple(int(x - (c if j == i else 0)) for j, x in enumerate(root))
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def parse_weight(text: str) -> Weight:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise MalformedPair(f"cannot read weight {text!r}") from None


def weight_label(weight: Weight) -> str:
    return ",".join(str(w) for w in weight)


@dataclass(frozen=True)
class OrbitElement:
    weight: Weight
    length: int
    word: tuple[int, ...]

    @property
    def label(self) -> str:
        return weight_label(self.weight)


def _require_dominant(rs: RootSystem, weight: Sequence[int]) -> Weight:
    w = tuple(int(x) for x in weight)
    if len(w) != rs.rank:
        raise NotDominant(f"weight {w} has {len(w)} labels, expected {rs.rank}")
    if any(x < 0 for x in w):
        raise NotDominant(f"weight {w} is not dominant")
    return w


def weyl_orbit(rs: RootSystem, weight: Sequence[int], limit: int = MAX_ORBIT) -> list[OrbitElement]:
    """The orbit W.lambda, each point with the length of its minimal representative.

    s_i moves mu = w(lambda) to a longer representative exactly when
    (mu, alpha_i^vee) > 0, so breadth-first search along those edges
    reaches every point at its length.
    """
    lam = _require_dominant(rs, weight)
    found = {lam: OrbitElement(lam, 0, ())}
    layer = [lam]
    while layer:
        nxt = []
        for mu in layer:
            here = found[mu]
            for i in range(rs.rank):
                if mu[i] > 0:
                    nu = rs.reflect(mu, i)
                    if nu not in found:
                        if len(found) >= limit:
                            raise OrbitTooLarge(f"orbit of {lam} exceeds {limit} points")
                        found[nu] = OrbitElement(nu, here.length + 1, (i + 1,) + here.word)
                        nxt.append(nu)
        layer = nxt
    return sorted(found.values(), key=lambda e: (e.length, e.label))


def bruhat_covers(rs: RootSystem, orbit: Sequence[OrbitElement]) -> list[tuple[str, str, int]]:
    """Covers mu < s_beta(mu) with length going up by one; the bond is (mu, beta^vee)."""
    by_weight = {e.weight: e for e in orbit}
    covers = []
    for e in orbit:
        for beta in rs.positive_roots:
            c = rs.pair(e.weight, beta)
            if c <= 0:
                continue
            image = by_weight[rs.reflect_by(e.weight, beta)]
            if image.length == e.length + 1:
                assert c.denominator == 1
                covers.append((e.label, image.label, int(c)))
    return covers


def bruhat_poset(rs: RootSystem, weight: Sequence[int], tau: str | None = None) -> BondedPoset:
    """W^lambda_tau as a bonded poset labelled by the Dynkin labels of orbit points."""
    orbit = weyl_orbit(rs, weight)
    poset = build_poset([e.label for e in orbit], bruhat_covers(rs, orbit))
    if tau is not None:
        poset = subposet_below(poset, tau)
    poset.require_gcd_condition()
    return poset


def orbit_element(rs: RootSystem, weight: Sequence[int], label: str) -> OrbitElement:
    for e in weyl_orbit(rs, weight):
        if e.label == label:
            return e
    raise MalformedPair(f"{label} is not in the orbit of {weight_label(tuple(weight))}")


def weyl_dimension(rs: RootSystem, weight: Sequence[int]) -> int:
    lam = _require_dominant(rs, weight)
    shifted = tuple(x + 1 for x in lam)
    num, den = Fraction(1), Fraction(1)
    for beta in rs.positive_roots:
        num *= rs.pair(shifted, beta)
        den *= rs.pair(rs.rho, beta)
    value = num / den
    assert value.denominator == 1
    return int(value)


# -- pair presentation of LS paths ---------------------------------------------------------

def pair_to_function(poset: BondedPoset, sigmas: Sequence[str], times: Sequence[Rational]) -> LSPath:
    """(sigma_1 > ... > sigma_r ; 0 = a_0 < ... < a_r = 1)  ->  sum (a_j - a_{j-1}) sigma_j."""
    ts = [as_fraction(t) for t in times]
    if len(ts) != len(sigmas) + 1 or not sigmas:
        raise MalformedPair("need r weights and r + 1 times")
    if ts[0] != 0 or ts[-1] != 1 or any(a >= b for a, b in zip(ts, ts[1:])):
        raise MalformedPair("times must increase strictly from 0 to 1")
    poset.check(*sigmas)
    if any(not poset.lt(b, a) for a, b in zip(sigmas, sigmas[1:])):
        raise MalformedPair("weights must be strictly decreasing")
    return ls_path(poset, PathVector({s: b - a for s, a, b in zip(sigmas, ts, ts[1:])}), 1)


def function_to_pair(poset: BondedPoset, path: PathVector) -> tuple[tuple[str, ...], tuple[Fraction, ...]]:
    """Inverse of ``pair_to_function``: the strictly decreasing presentation of a degree-1 path."""
    p = ls_path(poset, path, 1)
    seq = tuple(reversed(poset.sort_chain(p.support)))
    times = [Fraction(0)]
    for s in seq:
        times.append(times[-1] + p[s])
    return seq, tuple(times)

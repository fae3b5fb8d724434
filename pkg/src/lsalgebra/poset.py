"""Finite graded posets with bonds on their covers."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .errors import (
    CyclicCovers,
    GcdConditionFailed,
    IntervalTooLarge,
    NoUniqueExtremum,
    NonPositiveBond,
    NotAChain,
    NotComparable,
    NotGraded,
    ParseError,
    RedundantCover,
    TooManyChains,
    UnknownElement,
)

DEFAULT_MAX_CHAINS = 10**6


def max_chains_bound() -> int:
    """Chain-count safety bound; ``LSPATH_MAX_CHAINS`` overrides the default."""
    raw = os.environ.get("LSPATH_MAX_CHAINS")
    return int(raw) if raw else DEFAULT_MAX_CHAINS


Cover = tuple[str, str]


class BondedPoset:
    """A validated finite graded poset with unique extrema and cover bonds.

    Build instances through :func:`build_poset`; the object is immutable
    afterwards.  Labels are opaque: all order information comes from the
    covers.
    """

    def __init__(self, elements: Sequence[str], bonds: Mapping[Cover, int], length_of: Mapping[str, int],
                 below: Mapping[str, frozenset[str]]):
        self.length_of: dict[str, int] = dict(length_of)
        self.elements: tuple[str, ...] = tuple(sorted(elements, key=lambda s: (self.length_of[s], s)))
        self.bonds: dict[Cover, int] = dict(bonds)
        self._below = dict(below)
        up: dict[str, list[str]] = {s: [] for s in self.elements}
        down: dict[str, list[str]] = {s: [] for s in self.elements}
        for lo, hi in self.bonds:
            up[lo].append(hi)
            down[hi].append(lo)
        self.upper_covers = {s: tuple(sorted(v)) for s, v in up.items()}
        self.lower_covers = {s: tuple(sorted(v)) for s, v in down.items()}
        self.bottom = self.elements[0]
        self.top = max(self.elements, key=lambda s: (self.length_of[s], s))
        self.N = self.length_of[self.top]

    # -- order queries ---------------------------------------------------
    def __contains__(self, label: object) -> bool:
        return label in self.length_of

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"BondedPoset({len(self.elements)} elements, N={self.N})"

    def check(self, *labels: str) -> None:
        for s in labels:
            if s not in self.length_of:
                raise UnknownElement(f"unknown element {s!r}")

    def leq(self, a: str, b: str) -> bool:
        self.check(a, b)
        return a in self._below[b]

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    def comparable(self, a: str, b: str) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def down_set(self, tau: str) -> frozenset[str]:
        self.check(tau)
        return self._below[tau]

    def up_set(self, tau: str) -> frozenset[str]:
        self.check(tau)
        return frozenset(s for s in self.elements if tau in self._below[s])

    def bond(self, lo: str, hi: str) -> int:
        try:
            return self.bonds[(lo, hi)]
        except KeyError:
            raise NotComparable(f"{hi!r} does not cover {lo!r}") from None

    def sort_chain(self, labels: Iterable[str]) -> tuple[str, ...]:
        """Return ``labels`` in increasing order, or raise NotAChain."""
        items = sorted(set(labels), key=lambda s: (self.length_of.get(s, -1), s))
        self.check(*items)
        for a, b in zip(items, items[1:]):
            if not self.lt(a, b):
                raise NotAChain(f"{a!r} and {b!r} are not comparable")
        return tuple(items)

    def is_chain(self, labels: Iterable[str]) -> bool:
        try:
            self.sort_chain(labels)
        except NotAChain:
            return False
        return True

    def is_maximal_chain(self, chain: Sequence[str]) -> bool:
        if len(chain) != self.N + 1 or chain[0] != self.bottom or chain[-1] != self.top:
            return False
        return all((a, b) in self.bonds for a, b in zip(chain, chain[1:]))

    @cached_property
    def gcd_report(self) -> "GcdReport":
        return verify_gcd_condition(self)

    def require_gcd_condition(self) -> None:
        report = self.gcd_report
        if not report.ok:
            v = report.violations[0]
            raise GcdConditionFailed(
                f"bond gcds differ on [{v.lower}, {v.upper}]: {v.gcd1} along {list(v.chain1)} "
                f"vs {v.gcd2} along {list(v.chain2)}")

    @cached_property
    def _chain_gcds(self) -> dict[str, dict[str, dict[int, tuple[str, ...]]]]:
        # for each lower end: upper end -> {gcd value: lexicographically first witness chain}
        bound = max_chains_bound()
        out: dict[str, dict[str, dict[int, tuple[str, ...]]]] = {}
        for lo in self.elements:
            table: dict[str, dict[int, tuple[str, ...]]] = {lo: {0: (lo,)}}
            counts = {lo: 1}
            for s in self.elements:
                if s == lo or lo not in self._below[s]:
                    continue
                options: dict[int, tuple[str, ...]] = {}
                count = 0
                for p in self.lower_covers[s]:
                    if p not in table:
                        continue
                    count += counts[p]
                    b = self.bonds[(p, s)]
                    for g, chain in table[p].items():
                        key = gcd(g, b)
                        cand = chain + (s,)
                        if key not in options or cand < options[key]:
                            options[key] = cand
                if count > bound:
                    raise IntervalTooLarge(f"interval [{lo}, {s}] has more than {bound} maximal chains")
                table[s] = options
                counts[s] = count
            del table[lo]
            out[lo] = table
        return out


@dataclass(frozen=True)
class GcdViolation:
    lower: str
    upper: str
    chain1: tuple[str, ...]
    chain2: tuple[str, ...]
    gcd1: int
    gcd2: int


@dataclass(frozen=True)
class GcdReport:
    ok: bool
    violations: list[GcdViolation] = field(default_factory=list)


def build_poset(elements: Iterable[str], covers: Iterable[tuple]) -> BondedPoset:
    """Validate and build a bonded poset.

    ``covers`` holds ``(lower, upper)`` or ``(lower, upper, bond)`` tuples;
    a missing bond defaults to 1.
    """
    labels = list(elements)
    if len(set(labels)) != len(labels):
        raise ParseError("element labels must be distinct")
    if not labels:
        raise NoUniqueExtremum("empty poset")
    known = set(labels)
    bonds: dict[Cover, int] = {}
    for cov in covers:
        lo, hi = cov[0], cov[1]
        bond = cov[2] if len(cov) > 2 else 1
        for s in (lo, hi):
            if s not in known:
                raise UnknownElement(f"cover references unknown element {s!r}")
        if lo == hi:
            raise CyclicCovers(f"self-cover on {lo!r}")
        if not isinstance(bond, int) or isinstance(bond, bool) or bond < 1:
            raise NonPositiveBond(f"bond on ({lo}, {hi}) must be a positive integer, got {bond!r}")
        if (lo, hi) in bonds:
            raise RedundantCover(f"duplicate cover ({lo}, {hi})")
        bonds[(lo, hi)] = bond

    up: dict[str, set[str]] = {s: set() for s in labels}
    indeg = {s: 0 for s in labels}
    for lo, hi in bonds:
        up[lo].add(hi)
        indeg[hi] += 1

    # Kahn's algorithm gives a topological order or detects a cycle
    order: list[str] = []
    ready = sorted(s for s in labels if indeg[s] == 0)
    while ready:
        s = ready.pop()
        order.append(s)
        for t in up[s]:
            indeg[t] -= 1
            if indeg[t] == 0:
                ready.append(t)
    if len(order) != len(labels):
        raise CyclicCovers("the cover relation has a cycle")

    below: dict[str, set[str]] = {s: {s} for s in labels}
    for s in order:
        for t in up[s]:
            below[t] |= below[s]

    for lo, hi in bonds:
        # (lo, hi) is redundant if some other upper cover of lo lies below hi
        if any(t != hi and t in below[hi] for t in up[lo]):
            raise RedundantCover(f"cover ({lo}, {hi}) is implied by a longer chain")

    minimal = [s for s in labels if len(below[s]) == 1]
    maximal = [s for s in labels if not up[s]]
    if len(minimal) != 1 or len(maximal) != 1:
        raise NoUniqueExtremum(f"minimal elements {sorted(minimal)}, maximal elements {sorted(maximal)}")
    bottom = minimal[0]

    length_of: dict[str, int] = {bottom: 0}
    for s in order:
        if s == bottom:
            continue
        downs = [lo for lo, hi in bonds if hi == s]
        values = {length_of[lo] + 1 for lo in downs}
        if len(values) != 1:
            raise NotGraded(f"element {s!r} is reached by chains of different lengths {sorted(values)}")
        length_of[s] = values.pop()
    return BondedPoset(labels, bonds, length_of, {s: frozenset(v) for s, v in below.items()})


def verify_gcd_condition(poset: BondedPoset) -> GcdReport:
    """Check that every interval has the same bond gcd along all its maximal chains."""
    violations = []
    for lo, table in poset._chain_gcds.items():
        for hi, options in table.items():
            if len(options) > 1:
                (g1, c1), (g2, c2) = sorted(options.items())[:2]
                violations.append(GcdViolation(lo, hi, c1, c2, g1, g2))
    violations.sort(key=lambda v: (poset.length_of[v.upper] - poset.length_of[v.lower], v.lower, v.upper))
    return GcdReport(ok=not violations, violations=violations)


def extended_bond(poset: BondedPoset, lower: str, upper: str) -> int:
    """gcd of the bonds along a maximal chain of [lower, upper].

    With the gcd condition in force every chain gives the same value; without
    it, the lexicographically first chain is used.
    """
    poset.check(lower, upper)
    if not poset.lt(lower, upper):
        raise NotComparable(f"{lower!r} is not strictly below {upper!r}")
    options = poset._chain_gcds[lower][upper]
    return min(options.items(), key=lambda kv: kv[1])[0]


def lcm_bonds(poset: BondedPoset, sigma: str) -> int:
    """M_sigma: lcm of the bonds of all covers touching sigma (1 if there are none)."""
    poset.check(sigma)
    incident = [b for (lo, hi), b in poset.bonds.items() if sigma in (lo, hi)]
    return lcm(*incident) if incident else 1


def maximal_chains(poset: BondedPoset, limit: int | None = None) -> list[tuple[str, ...]]:
    """All maximal chains, in lexicographic order of their label sequences."""
    bound = max_chains_bound() if limit is None else limit
    out: list[tuple[str, ...]] = []

    def walk(prefix: list[str]) -> None:
        s = prefix[-1]
        if s == poset.top:
            if len(out) >= bound:
                raise TooManyChains(f"more than {bound} maximal chains")
            out.append(tuple(prefix))
            return
        for t in poset.upper_covers[s]:
            prefix.append(t)
            walk(prefix)
            prefix.pop()

    walk([poset.bottom])
    return out


def subposet_below(poset: BondedPoset, tau: str) -> BondedPoset:
    """The induced bonded poset on {sigma | sigma <= tau}."""
    keep = poset.down_set(tau)
    covers = [(lo, hi, b) for (lo, hi), b in poset.bonds.items() if lo in keep and hi in keep]
    return build_poset([s for s in poset.elements if s in keep], covers)


def subposet_above(poset: BondedPoset, tau: str) -> BondedPoset:
    keep = poset.up_set(tau)
    covers = [(lo, hi, b) for (lo, hi), b in poset.bonds.items() if lo in keep and hi in keep]
    return build_poset([s for s in poset.elements if s in keep], covers)


# -- JSON ------------------------------------------------------------------

def poset_to_json(poset: BondedPoset) -> dict:
    covers = [{"lower": lo, "upper": hi, "bond": b} for (lo, hi), b in sorted(poset.bonds.items())]
    return {"elements": list(poset.elements), "covers": covers}


def poset_from_json(obj: Mapping) -> BondedPoset:
    try:
        elements = [str(s) for s in obj["elements"]]
        covers = [(str(c["lower"]), str(c["upper"]), c.get("bond", 1)) for c in obj["covers"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed poset JSON: {exc}") from exc
    return build_poset(elements, covers)


def load_poset(path: str) -> BondedPoset:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from exc
    return poset_from_json(obj)


def find_isomorphism(p: BondedPoset, q: BondedPoset) -> dict[str, str] | None:
    """A bond-preserving order isomorphism p -> q, found by backtracking level by level."""
    if len(p) != len(q) or sorted(p.bonds.values()) != sorted(q.bonds.values()):
        return None
    order = sorted(p.elements, key=lambda s: (p.length_of[s], s))
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def fits(s: str, t: str) -> bool:
        if p.length_of[s] != q.length_of[t] or len(p.upper_covers[s]) != len(q.upper_covers[t]):
            return False
        if len(p.lower_covers[s]) != len(q.lower_covers[t]):
            return False
        # all lower covers of s are already placed, since we go up by length
        images = {mapping[lo]: p.bond(lo, s) for lo in p.lower_covers[s]}
        return images == {lo: q.bond(lo, t) for lo in q.lower_covers[t]}

    def place(i: int) -> bool:
        if i == len(order):
            return True
        s = order[i]
        for t in q.elements:
            if t not in used and fits(s, t):
                mapping[s] = t
                used.add(t)
                if place(i + 1):
                    return True
                used.discard(t)
                del mapping[s]
        return False

    return dict(mapping) if place(0) else None

"""The reverse-lexicographic total orders on Q^S and the partial order they share."""

from __future__ import annotations

import enum
from typing import Iterator, Sequence

from .errors import TooLarge, UnknownElement
from .poset import BondedPoset
from .vectors import PathVector

DEFAULT_MAX_EXTENSION_ELEMENTS = 8

LinearExtension = tuple[str, ...]


class Cmp(enum.Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"
    INCOMPARABLE = "INCOMPARABLE"

    def flip(self) -> "Cmp":
        return {Cmp.LT: Cmp.GT, Cmp.GT: Cmp.LT}.get(self, self)


def default_extension(poset: BondedPoset) -> LinearExtension:
    """Sort by (length, label): a length-compatible refinement of the order."""
    return tuple(sorted(poset.elements, key=lambda s: (poset.length_of[s], s)))


def is_linear_extension(poset: BondedPoset, ext: Sequence[str]) -> bool:
    if sorted(ext) != sorted(poset.elements):
        return False
    pos = {s: i for i, s in enumerate(ext)}
    return all(pos[lo] < pos[hi] for lo, hi in poset.bonds)


def rlex_key(vec: PathVector, ext: Sequence[str]) -> tuple:
    """Sort key realising the reverse-lex order for the total order ``ext``."""
    unknown = vec.support - set(ext)
    if unknown:
        raise UnknownElement(f"labels {sorted(unknown)} are not in the linear extension")
    return tuple(vec[s] for s in reversed(ext))


def rlex_compare(v: PathVector, w: PathVector, ext: Sequence[str]) -> Cmp:
    a, b = rlex_key(v, ext), rlex_key(w, ext)
    if a == b:
        return Cmp.EQ
    return Cmp.LT if a < b else Cmp.GT


def rlex_min(vectors, ext: Sequence[str]):
    return min(vectors, key=lambda v: rlex_key(v, ext))


def triangle_compare(poset: BondedPoset, v: PathVector, w: PathVector) -> Cmp:
    """Compare in the partial order: look only at the maximal coordinates where v, w differ."""
    poset.check(*(v.support | w.support))
    diff = {s for s in v.support | w.support if v[s] != w[s]}
    if not diff:
        return Cmp.EQ
    tops = [s for s in diff if not any(t != s and poset.leq(s, t) for t in diff)]
    if all(v[s] < w[s] for s in tops):
        return Cmp.LT
    if all(v[s] > w[s] for s in tops):
        return Cmp.GT
    return Cmp.INCOMPARABLE


def triangle_leq(poset: BondedPoset, v: PathVector, w: PathVector) -> bool:
    return triangle_compare(poset, v, w) in (Cmp.LT, Cmp.EQ)


def triangle_lt(poset: BondedPoset, v: PathVector, w: PathVector) -> bool:
    return triangle_compare(poset, v, w) is Cmp.LT


def iter_linear_extensions(poset: BondedPoset) -> Iterator[LinearExtension]:
    indeg = {s: len(poset.lower_covers[s]) for s in poset.elements}
    prefix: list[str] = []

    def walk() -> Iterator[LinearExtension]:
        if len(prefix) == len(indeg):
            yield tuple(prefix)
            return
        for s in sorted(s for s, d in indeg.items() if d == 0 and s not in placed):
            placed.add(s)
            prefix.append(s)
            for t in poset.upper_covers[s]:
                indeg[t] -= 1
            yield from walk()
            for t in poset.upper_covers[s]:
                indeg[t] += 1
            prefix.pop()
            placed.discard(s)

    placed: set[str] = set()
    yield from walk()


def linear_extensions(poset: BondedPoset, max_elements: int = DEFAULT_MAX_EXTENSION_ELEMENTS) -> list[LinearExtension]:
    """Every topological sort of the poset, in lexicographic order."""
    if len(poset) > max_elements:
        raise TooLarge(f"{len(poset)} elements exceeds the linear-extension bound {max_elements}")
    return list(iter_linear_extensions(poset))

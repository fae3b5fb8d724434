"""Exact sparse linear algebra over Q: incremental echelon forms with coefficient tracking."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping, Sequence

SparseVector = Mapping[Hashable, Fraction]


class EchelonBasis:
    """Row-reduce vectors one at a time, remembering each row as a combination of the inputs."""

    def __init__(self):
        self._rows: list[tuple[Hashable, dict, dict[int, Fraction]]] = []
        self._pivots: dict[Hashable, int] = {}
        self.size = 0

    def _reduce(self, vec: SparseVector) -> tuple[dict, dict[int, Fraction]]:
        rest = {k: Fraction(v) for k, v in vec.items() if v}
        combo: dict[int, Fraction] = {}
        changed = True
        while changed:
            changed = False
            for key in sorted((k for k in rest if k in self._pivots), key=repr):
                if key not in rest:
                    continue
                pivot, row, row_combo = self._rows[self._pivots[key]]
                f = rest[key] / row[pivot]
                for k, v in row.items():
                    nv = rest.get(k, Fraction(0)) - f * v
                    if nv:
                        rest[k] = nv
                    else:
                        rest.pop(k, None)
                for i, c in row_combo.items():
                    nc = combo.get(i, Fraction(0)) - f * c
                    if nc:
                        combo[i] = nc
                    else:
                        combo.pop(i, None)
                changed = True
        return rest, combo

    def add(self, vec: SparseVector) -> bool:
        """Insert the next input vector; True if it was independent of the earlier ones."""
        index = self.size
        self.size += 1
        rest, combo = self._reduce(vec)
        if not rest:
            return False
        # rest = vec + sum combo_i v_i, so the new row is input ``index`` plus combo
        combo[index] = Fraction(1)
        pivot = min(rest, key=repr)
        self._pivots[pivot] = len(self._rows)
        self._rows.append((pivot, rest, combo))
        return True

    @property
    def rank(self) -> int:
        return len(self._rows)

    def express(self, target: SparseVector) -> dict[int, Fraction] | None:
        """Coefficients c with sum c_i v_i = target, or None if target is outside the span."""
        rest, combo = self._reduce(target)
        if rest:
            return None
        return {i: -c for i, c in combo.items() if c}


def rank(vectors: Sequence[SparseVector]) -> int:
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return basis.rank


def solve_in_span(vectors: Sequence[SparseVector], target: SparseVector) -> dict[int, Fraction] | None:
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return basis.express(target)

"""Sparse polynomials with rational coefficients in the entries of a generic d x n matrix."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .vectors import Rational, as_fraction

Exponents = tuple[int, ...]


class MinorPolynomial:
    """Polynomial in x_{jc} (row j, column c, both 1-based), stored as exponent tuple -> coefficient."""

    __slots__ = ("d", "n", "_terms")

    def __init__(self, d: int, n: int, terms: Mapping[Exponents, Rational] | Iterable[tuple[Exponents, Rational]] = ()):
        self.d, self.n = d, n
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, Fraction] = {}
        for e, c in pairs:
            acc[e] = acc.get(e, Fraction(0)) + as_fraction(c)
        self._terms = {e: c for e, c in acc.items() if c}

    # -- construction ---------------------------------------------------
    def var_index(self, row: int, col: int) -> int:
        return (row - 1) * self.n + (col - 1)

    @classmethod
    def constant(cls, d: int, n: int, value: Rational = 1) -> "MinorPolynomial":
        return cls(d, n, {(0,) * (d * n): value})

    @classmethod
    def monomial(cls, d: int, n: int, entries: Iterable[tuple[int, int]], coeff: Rational = 1) -> "MinorPolynomial":
        e = [0] * (d * n)
        for row, col in entries:
            e[(row - 1) * n + (col - 1)] += 1
        return cls(d, n, {tuple(e): coeff})

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        degs = {sum(e) for e in self._terms}
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop() if degs else 0

    def min_exponent(self, row: int, col: int) -> int:
        i = self.var_index(row, col)
        return min(e[i] for e in self._terms)

    # -- arithmetic -----------------------------------------------------
    def _same(self, other: "MinorPolynomial") -> None:
        if (self.d, self.n) != (other.d, other.n):
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "MinorPolynomial") -> "MinorPolynomial":
        self._same(other)
        return MinorPolynomial(self.d, self.n, itertools.chain(self._terms.items(), other._terms.items()))

    def __neg__(self) -> "MinorPolynomial":
        return MinorPolynomial(self.d, self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MinorPolynomial") -> "MinorPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "MinorPolynomial":
        if not isinstance(other, MinorPolynomial):
            c = as_fraction(other)
            return MinorPolynomial(self.d, self.n, {e: c * v for e, v in self._terms.items()})
        self._same(other)
        acc: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return MinorPolynomial(self.d, self.n, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MinorPolynomial":
        out = MinorPolynomial.constant(self.d, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divide_by_monomial(self, exps: Exponents) -> "MinorPolynomial | None":
        """Exact quotient by a monomial, or None if some term is not divisible."""
        out = {}
        for e, c in self._terms.items():
            q = tuple(a - b for a, b in zip(e, exps))
            if any(v < 0 for v in q):
                return None
            out[q] = c
        return MinorPolynomial(self.d, self.n, out)

    def restrict(self, allowed: set[tuple[int, int]]) -> "MinorPolynomial":
        """Set every variable outside ``allowed`` to zero."""
        idx = {self.var_index(r, c) for r, c in allowed}
        keep = {e: c for e, c in self._terms.items() if all(v == 0 or i in idx for i, v in enumerate(e))}
        return MinorPolynomial(self.d, self.n, keep)

    def as_multiple_of(self, other: "MinorPolynomial") -> Fraction | None:
        """c with self == c * other, if it exists."""
        if other.is_zero() or set(self._terms) != set(other._terms):
            return None
        ratios = {self._terms[e] / other._terms[e] for e in self._terms}
        return ratios.pop() if len(ratios) == 1 else None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MinorPolynomial):
            return NotImplemented
        return (self.d, self.n) == (other.d, other.n) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.d, self.n, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            factors = []
            for i, v in enumerate(e):
                if v:
                    name = f"x{i // self.n + 1}{i % self.n + 1}"
                    factors.append(name if v == 1 else f"{name}^{v}")
            mono = "*".join(factors) or "1"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def determinant_minor(d: int, n: int, columns: Sequence[int],
                      allowed: set[tuple[int, int]] | None = None) -> MinorPolynomial:
    """det of the d x d submatrix on ``columns`` (increasing) of the generic matrix.

    Entries outside ``allowed`` are zero.  Leibniz expansion; d is small here.
    """
    terms: dict[Exponents, Fraction] = {}
    for perm in itertools.permutations(range(d)):
        entries = [(row + 1, columns[perm[row]]) for row in range(d)]
        if allowed is not None and any(e not in allowed for e in entries):
            continue
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        e = [0] * (d * n)
        for row, col in entries:
            e[(row - 1) * n + (col - 1)] += 1
        key = tuple(e)
        terms[key] = terms.get(key, Fraction(0)) + (-1) ** inversions
    return MinorPolynomial(d, n, terms)

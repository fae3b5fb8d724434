"""Sparse exact-rational vectors in Q^S, keyed by poset labels."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import ParseError

Rational = Union[int, Fraction, str]


def as_fraction(value: Rational) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
    raise ParseError(f"not an exact rational: {value!r}")


def format_fraction(value: Fraction) -> str:
    return str(Fraction(value))


class PathVector:
    """An immutable element of Q^S stored sparsely (zeros are dropped).

    Arithmetic returns plain ``PathVector`` instances; equality and hashing
    only look at the entries, so an ``LSPath`` equals the ``PathVector`` with
    the same values.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, values: Mapping[str, Rational] | Iterable[tuple[str, Rational]] | None = None):
        pairs = values.items() if isinstance(values, Mapping) else (values or ())
        acc: dict[str, Fraction] = {}
        for label, value in pairs:
            acc[label] = acc.get(label, Fraction(0)) + as_fraction(value)
        self._items = tuple(sorted((k, v) for k, v in acc.items() if v != 0))
        self._hash = hash(self._items)

    @classmethod
    def unit(cls, label: str, coeff: Rational = 1) -> "PathVector":
        return cls({label: coeff})

    def __getitem__(self, label: str) -> Fraction:
        for key, value in self._items:
            if key == label:
                return value
        return Fraction(0)

    def get(self, label: str) -> Fraction:
        return self[label]

    def items(self) -> tuple[tuple[str, Fraction], ...]:
        return self._items

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self._items)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(k for k, _ in self._items)

    def total(self) -> Fraction:
        return sum((v for _, v in self._items), Fraction(0))

    def is_zero(self) -> bool:
        return not self._items

    def restrict(self, labels: Iterable[str]) -> "PathVector":
        keep = set(labels)
        return PathVector((k, v) for k, v in self._items if k in keep)

    def __add__(self, other: "PathVector") -> "PathVector":
        if not isinstance(other, PathVector):
            return NotImplemented
        return PathVector(self._items + other._items)

    def __sub__(self, other: "PathVector") -> "PathVector":
        if not isinstance(other, PathVector):
            return NotImplemented
        return PathVector(self._items + tuple((k, -v) for k, v in other._items))

    def __neg__(self) -> "PathVector":
        return PathVector((k, -v) for k, v in self._items)

    def __mul__(self, scalar: Rational) -> "PathVector":
        c = as_fraction(scalar)
        return PathVector((k, c * v) for k, v in self._items)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Rational) -> "PathVector":
        c = as_fraction(scalar)
        return PathVector((k, v / c) for k, v in self._items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PathVector):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._items)

    def __str__(self) -> str:
        if not self._items:
            return "0"
        parts = []
        for label, value in self._items:
            parts.append(label if value == 1 else f"{value}*{label}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def to_json(self) -> dict:
        return {"values": {k: format_fraction(v) for k, v in self._items}}

    @classmethod
    def from_json(cls, obj: Mapping) -> "PathVector":
        values = obj.get("values", obj) if isinstance(obj, Mapping) else None
        if not isinstance(values, Mapping):
            raise ParseError("path vector JSON must be an object of label -> 'p/q'")
        return cls({str(k): as_fraction(v) for k, v in values.items()})

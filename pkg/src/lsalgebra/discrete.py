"""The discrete LS algebra, weight systems, quotients, and an LS-axiom checker."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import MissingEntry, NonStandardTarget, ParseError
from .orders import Cmp, triangle_compare
from .paths import (
    LSPath,
    canonical_form,
    comparable_supports,
    enumerate_paths,
    is_standard,
    max_supp,
    path_from_json,
    sort_key,
)
from .poset import BondedPoset
from .vectors import PathVector, Rational, as_fraction, format_fraction


class AlgebraElement:
    """A finite rational combination of LS paths (the standard-monomial basis)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[LSPath, Rational] | Iterable[tuple[LSPath, Rational]] | None = None):
        pairs = terms.items() if isinstance(terms, Mapping) else (terms or ())
        acc: dict[LSPath, Fraction] = {}
        for path, coeff in pairs:
            key = path if isinstance(path, LSPath) else LSPath(path.items())
            acc[key] = acc.get(key, Fraction(0)) + as_fraction(coeff)
        self._terms = {p: c for p, c in acc.items() if c != 0}

    @classmethod
    def basis(cls, path: PathVector) -> "AlgebraElement":
        return cls([(path, 1)])

    @property
    def terms(self) -> dict[LSPath, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {p.degree for p in self._terms}

    def component(self, degree: int) -> "AlgebraElement":
        return AlgebraElement((p, c) for p, c in self._terms.items() if p.degree == degree)

    def coefficient(self, path: PathVector) -> Fraction:
        return self._terms.get(path, Fraction(0))

    def __iter__(self) -> Iterator[tuple[LSPath, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other * -1

    def __mul__(self, scalar: Rational) -> "AlgebraElement":
        c = as_fraction(scalar)
        return AlgebraElement((p, c * v) for p, v in self._terms.items())

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "AlgebraElement(0)"
        body = " + ".join(f"{c}*[{p}]" for p, c in sorted(self._terms.items(), key=lambda kv: str(kv[0])))
        return f"AlgebraElement({body})"

    def to_json(self, poset: BondedPoset) -> dict:
        ordered = sorted(self._terms.items(), key=lambda kv: sort_key(poset, kv[0]))
        return {"terms": [{"coeff": format_fraction(c), "path": p.to_json()} for p, c in ordered]}

    @classmethod
    def from_json(cls, poset: BondedPoset, obj: Mapping) -> "AlgebraElement":
        try:
            return cls((path_from_json(poset, t["path"]), as_fraction(t["coeff"])) for t in obj["terms"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed algebra element JSON: {exc}") from exc


def multiply_discrete(poset: BondedPoset, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Product in the discrete LS algebra: pi * pi' = pi + pi' if supports are comparable, else 0."""
    poset.require_gcd_condition()
    out: list[tuple[LSPath, Fraction]] = []
    for p, a in x:
        for q, b in y:
            if comparable_supports(poset, (p, q)):
                out.append((LSPath((p + q).items()), a * b))
    return AlgebraElement(out)


def project_to_quotient(poset: BondedPoset, x: AlgebraElement, tau: str) -> AlgebraElement:
    """Image in A_tau = A / I_tau: drop basis paths whose support leaves S_{<=tau}."""
    keep = poset.down_set(tau)
    return AlgebraElement((p, c) for p, c in x if p.support <= keep)


def ideal_basis_below(poset: BondedPoset, tau: str, r: int) -> list[LSPath]:
    """Degree-r basis paths spanning I_tau: those with max supp not below tau."""
    poset.check(tau)
    return [p for p in enumerate_paths(poset, r) if not p.is_zero() and not poset.leq(max_supp(poset, p), tau)]


# -- weights ------------------------------------------------------------------

@dataclass(frozen=True)
class WeightSystem:
    """Values of a weight map on the extremal paths, in Z^m."""

    assignment: Mapping[str, tuple[int, ...]]

    def __post_init__(self):
        norm = {}
        for label, w in self.assignment.items():
            norm[label] = (w,) if isinstance(w, int) else tuple(w)
        ranks = {len(w) for w in norm.values()}
        if len(ranks) > 1:
            raise ValueError("all weights must live in the same Z^m")
        object.__setattr__(self, "assignment", norm)

    @property
    def rank(self) -> int:
        return len(next(iter(self.assignment.values()))) if self.assignment else 0


def weight_of(ws: WeightSystem, path: PathVector) -> tuple[tuple[Fraction, ...], bool]:
    """sum_sigma pi(sigma) * lambda(sigma), and whether that vector is integral."""
    acc = [Fraction(0)] * ws.rank
    for label, value in path.items():
        for i, w in enumerate(ws.assignment[label]):
            acc[i] += value * w
    vec = tuple(acc)
    return vec, all(v.denominator == 1 for v in vec)


@dataclass
class EffectivenessReport:
    effective: bool
    collisions: list[tuple[str, int, list[LSPath]]] = field(default_factory=list)


def check_effective(poset: BondedPoset, ws: WeightSystem, r_max: int) -> EffectivenessReport:
    """Is r*sigma the only degree-r path of weight r*lambda(sigma), for all sigma and r <= r_max?"""
    collisions = []
    for r in range(1, r_max + 1):
        by_weight: dict[tuple[Fraction, ...], list[LSPath]] = {}
        for p in enumerate_paths(poset, r):
            by_weight.setdefault(weight_of(ws, p)[0], []).append(p)
        for s in poset.elements:
            target = tuple(r * Fraction(w) for w in ws.assignment[s])
            same = by_weight.get(target, [])
            if same != [LSPath({s: r})]:
                collisions.append((s, r, same))
    return EffectivenessReport(not collisions, collisions)


# -- straightening tables -------------------------------------------------------

Monomial = tuple[LSPath, LSPath]


def _pair_key(poset: BondedPoset, a: LSPath, b: LSPath) -> Monomial:
    return (a, b) if sort_key(poset, a) <= sort_key(poset, b) else (b, a)


def standard_order(poset: BondedPoset, a: PathVector, b: PathVector) -> tuple | None:
    """The pair in standard order if one ordering is standard, else None."""
    if is_standard(poset, (a, b)):
        return (a, b)
    if is_standard(poset, (b, a)):
        return (b, a)
    return None


class StraighteningTable:
    """Standard expansions of the non-standard degree-2 monomials in a generating set."""

    def __init__(self, poset: BondedPoset, generators: Sequence[LSPath] | None = None):
        self.poset = poset
        self.generators = tuple(generators) if generators is not None else tuple(enumerate_paths(poset, 1))
        self.entries: dict[Monomial, dict[Monomial, Fraction]] = {}

    def set(self, lhs: Sequence[LSPath], rhs: Mapping[Monomial, Rational] | Iterable[tuple[Monomial, Rational]]):
        pairs = rhs.items() if isinstance(rhs, Mapping) else rhs
        clean: dict[Monomial, Fraction] = {}
        for mono, c in pairs:
            key = tuple(LSPath(m.items()) for m in mono)
            clean[key] = clean.get(key, Fraction(0)) + as_fraction(c)
        self.entries[_pair_key(self.poset, *lhs)] = {m: c for m, c in clean.items() if c != 0}

    def get(self, a: LSPath, b: LSPath) -> dict[Monomial, Fraction]:
        try:
            return self.entries[_pair_key(self.poset, a, b)]
        except KeyError:
            raise MissingEntry(f"no straightening relation for [{a}]*[{b}]") from None

    def nonstandard_pairs(self) -> list[Monomial]:
        gens = self.generators
        out = []
        for i, a in enumerate(gens):
            for b in gens[i:]:
                if standard_order(self.poset, a, b) is None:
                    out.append(_pair_key(self.poset, a, b))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StraighteningTable):
            return NotImplemented
        return self.entries == other.entries

    def to_json(self) -> list:
        out = []
        for (a, b), rhs in sorted(self.entries.items(), key=lambda kv: (sort_key(self.poset, kv[0][0]),
                                                                        sort_key(self.poset, kv[0][1]))):
            terms = [{"coeff": format_fraction(c), "monomial": [m[0].to_json(), m[1].to_json()]}
                     for m, c in sorted(rhs.items(), key=lambda kv: (sort_key(self.poset, kv[0][0]),
                                                                     sort_key(self.poset, kv[0][1])))]
            out.append({"lhs": [a.to_json(), b.to_json()], "rhs": terms})
        return out

    @classmethod
    def from_json(cls, poset: BondedPoset, obj: list, generators: Sequence[LSPath] | None = None) -> "StraighteningTable":
        table = cls(poset, generators)
        try:
            for entry in obj:
                lhs = [path_from_json(poset, p) for p in entry["lhs"]]
                rhs = [(tuple(path_from_json(poset, p) for p in t["monomial"]), as_fraction(t["coeff"]))
                       for t in entry["rhs"]]
                if len(lhs) != 2 or any(len(m) != 2 for m, _ in rhs):
                    raise ParseError("straightening entries must be degree-2 monomials")
                table.set(lhs, rhs)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed straightening table: {exc}") from exc
        return table

    def dump(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=1, sort_keys=True)
            fh.write("\n")

    @classmethod
    def load(cls, poset: BondedPoset, path: str) -> "StraighteningTable":
        with open(path, encoding="utf-8") as fh:
            try:
                return cls.from_json(poset, json.load(fh))
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path}: {exc}") from exc


def discrete_straightening_table(poset: BondedPoset) -> StraighteningTable:
    table = StraighteningTable(poset)
    for a, b in table.nonstandard_pairs():
        if comparable_supports(poset, (a, b)):
            table.set((a, b), [(tuple(canonical_form(poset, (a, b))), 1)])
        else:
            table.set((a, b), [])
    return table


@dataclass
class AxiomReport:
    ok: bool
    checked: int
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def verify_ls_axioms(poset: BondedPoset, table: StraighteningTable, ws: WeightSystem | None = None,
                     strict: bool = True) -> AxiomReport:
    """Check a straightening table against the order, coefficient and homogeneity axioms.

    This certifies the axioms only; it cannot tell whether the relations are
    the true ones in some ring.
    """
    failures: list[str] = []
    notes: list[str] = []
    pairs = table.nonstandard_pairs()
    for a, b in pairs:
        rhs = table.get(a, b)
        lhs_sum = a + b
        for (c1, c2), coeff in rhs.items():
            if not is_standard(poset, (c1, c2)):
                raise NonStandardTarget(f"[{c1}]*[{c2}] in the relation for [{a}]*[{b}] is not standard")
            if triangle_compare(poset, lhs_sum, c1 + c2) not in (Cmp.LT, Cmp.EQ):
                failures.append(f"LS2: [{a}]*[{b}] has term [{c1}]*[{c2}] not above {lhs_sum}")
            for f in (a, b):
                if triangle_compare(poset, f, c2) is not Cmp.LT:
                    failures.append(f"inequality: {f} is not strictly below {c2} in [{a}]*[{b}]")
            if ws is not None and weight_of(ws, lhs_sum)[0] != weight_of(ws, c1 + c2)[0]:
                failures.append(f"weights: [{c1}]*[{c2}] has a different weight from [{a}]*[{b}]")
        if comparable_supports(poset, (a, b)):
            canon = tuple(canonical_form(poset, (a, b)))
            coeff = rhs.get(canon, Fraction(0))
            if coeff == 0:
                failures.append(f"LS3: canonical form missing from the relation for [{a}]*[{b}]")
            elif coeff != 1:
                msg = f"LS3: canonical form of [{a}]*[{b}] has coefficient {coeff}"
                (failures if strict else notes).append(msg)
    return AxiomReport(not failures, len(pairs), failures, notes)

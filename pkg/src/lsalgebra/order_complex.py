"""The order complex of a bonded poset and its bond-induced integral structure."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import TooLarge
from .paths import chain_bonds, enumerate_paths, is_ls_path
from .poset import BondedPoset, lcm_bonds, maximal_chains
from .vectors import PathVector

DEFAULT_MAX_FACES = 10**6


def faces(poset: BondedPoset, limit: int = DEFAULT_MAX_FACES) -> list[tuple[str, ...]]:
    """All nonempty chains, ordered by size and then by label sequence."""
    out: list[tuple[str, ...]] = []

    def grow(chain: list[str]) -> None:
        if len(out) >= limit:
            raise TooLarge(f"more than {limit} faces")
        out.append(tuple(chain))
        for t in poset.elements:
            if poset.lt(chain[-1], t):
                chain.append(t)
                grow(chain)
                chain.pop()

    for s in poset.elements:
        grow([s])
    return sorted(out, key=lambda c: (len(c), c))


@dataclass(frozen=True)
class SimplexEmbedding:
    """Affine embedding of Delta(C) into Z^k; vertex i goes to sum_{j<=i} b_j e_j."""

    chain: tuple[str, ...]
    bonds: tuple[int, ...]
    vertices: tuple[tuple[int, ...], ...]

    def image(self, point: PathVector) -> tuple[Fraction, ...]:
        k = len(self.bonds)
        coords = [Fraction(0)] * k
        for i, s in enumerate(self.chain):
            a = point[s]
            for j in range(k):
                coords[j] += a * self.vertices[i][j]
        return tuple(coords)


def simplex_embedding(poset: BondedPoset, chain: Iterable[str]) -> SimplexEmbedding:
    seq = poset.sort_chain(chain)
    bonds = chain_bonds(poset, seq)
    k = len(bonds)
    vertices = []
    for i in range(len(seq)):
        vertices.append(tuple(bonds[j] if j < i else 0 for j in range(k)))
    return SimplexEmbedding(seq, tuple(bonds), tuple(vertices))


def level_points(poset: BondedPoset, r: int) -> set[PathVector]:
    """Delta_r(S) = {pi / r : pi in LS_r}."""
    if r < 1:
        raise ValueError("levels start at r = 1")
    return {PathVector(p.items()) / r for p in enumerate_paths(poset, r)}


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Unique solution of a square exact linear system, or None if singular."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col] / aug[col][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def _simplex_lattice_points(emb: SimplexEmbedding, r: int) -> set[PathVector]:
    # integer points of r * i_K(Delta(C)), pulled back through barycentric coordinates
    k = len(emb.bonds)
    if k == 0:
        return {PathVector({emb.chain[0]: 1})}
    # rows: the k coordinates plus the affine condition sum a_i = 1
    matrix = [[Fraction(emb.vertices[i][j]) for i in range(k + 1)] for j in range(k)]
    matrix.append([Fraction(1)] * (k + 1))
    box = [range(0, r * max(v[j] for v in emb.vertices) + 1) for j in range(k)]
    found = set()
    for y in itertools.product(*box):
        bary = _solve(matrix, [Fraction(c, r) for c in y] + [Fraction(1)])
        if bary is not None and all(a >= 0 for a in bary):
            found.add(PathVector(zip(emb.chain, bary)))
    return found


def _brute_force_level(poset: BondedPoset, chain: Sequence[str], r: int) -> set[PathVector]:
    # every pi in LS_r(C) has M_sigma * pi(sigma) integral, so a grid of step 1/M suffices
    m = lcm(*(lcm_bonds(poset, s) for s in chain))
    found = set()
    for parts in _compositions(r * m, len(chain)):
        vec = PathVector({s: Fraction(p, m) for s, p in zip(chain, parts)})
        if is_ls_path(poset, vec, r):
            found.add(vec / r)
    return found


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def verify_integral_structure(poset: BondedPoset, chain: Iterable[str], r: int) -> bool:
    """Check that i_K is a bijection between LS_r(C)/r and (1/r)Z^k in i_K(Delta(C)).

    Both sides are enumerated independently: LS_r(C) by brute force over a
    rational grid, the lattice side by scanning integer points of a box.
    """
    emb = simplex_embedding(poset, chain)
    paths_side = _brute_force_level(poset, emb.chain, r)
    lattice_side = _simplex_lattice_points(emb, r)
    if paths_side != lattice_side:
        return False
    images = {emb.image(p) for p in paths_side}
    return len(images) == len(paths_side) and all(
        all((c * r).denominator == 1 for c in img) for img in images)


def lattice_level_points(poset: BondedPoset, r: int) -> set[PathVector]:
    """Delta_r(S) built from the simplices alone: lattice points of r * i_K(Delta(C)) for every maximal chain C."""
    found: set[PathVector] = set()
    for chain in maximal_chains(poset):
        found |= _simplex_lattice_points(simplex_embedding(poset, chain), r)
    return found

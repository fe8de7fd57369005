"""Finite joins ``F * F * ... * F`` and their integral homology.

A simplex picks at most one point from each of the ``copies`` blocks and at
least one point overall; it is stored as a sorted tuple of
``(block, point_index)`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Sequence

from . import intlinalg
from .dee import DSubgroup, fixed_points
from .errors import SizeTooLarge
from .intlinalg import AbelianGroup

MAX_TOP_SIMPLICES = 10**5
# homology builds dense boundary matrices; keep each degree small
MAX_HOMOLOGY_SIMPLICES = 5000

Simplex = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class JoinComplex:
    labels: tuple
    copies: int

    @property
    def m(self) -> int:
        return len(self.labels)

    @property
    def dimension(self) -> int:
        return self.copies - 1 if self.labels else -1

    def count(self, d: int) -> int:
        """Number of ``d``-simplices."""
        return comb(self.copies, d + 1) * self.m ** (d + 1)

    def simplices(self, d: int) -> list[Simplex]:
        out = []
        for blocks in combinations(range(self.copies), d + 1):
            for pts in product(range(self.m), repeat=d + 1):
                out.append(tuple(zip(blocks, pts)))
        return out

    def vertices(self) -> list[tuple[int, object]]:
        return [(b, x) for b in range(self.copies) for x in self.labels]

    def is_face_closed(self, d: int) -> bool:
        have = set(self.simplices(d - 1))
        return all(s[:i] + s[i + 1 :] in have for s in self.simplices(d) for i in range(len(s)))


def build_join(F: Sequence, copies: int) -> JoinComplex:
    """Join of ``copies`` copies of the finite set ``F``."""
    F = tuple(dict.fromkeys(F))
    if not F:
        raise ValueError("F must be nonempty")
    if copies < 1:
        raise ValueError("need at least one copy")
    if len(F) ** copies > MAX_TOP_SIMPLICES:
        raise SizeTooLarge(f"{len(F)}^{copies} top simplices exceeds {MAX_TOP_SIMPLICES}")
    return JoinComplex(F, copies)


def fixed_subcomplex(J: JoinComplex, H: DSubgroup) -> JoinComplex:
    """The join of ``F ∩ π^H`` blockwise; may be empty."""
    coset = fixed_points(H)
    keep = tuple(g for g in J.labels if coset.contains(g))
    return JoinComplex(keep, J.copies)


def boundary_matrix(J: JoinComplex, d: int) -> list[list[int]]:
    """Matrix of ``C_d -> C_{d-1}``; ``d = 0`` gives the augmentation row."""
    cols = J.simplices(d)
    if d == 0:
        return [[1] * len(cols)]
    rows = J.simplices(d - 1)
    index = {s: i for i, s in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for c, s in enumerate(cols):
        for i in range(len(s)):
            M[index[s[:i] + s[i + 1 :]]][c] = -1 if i % 2 else 1
    return M


def homology(J: JoinComplex) -> list[AbelianGroup]:
    """Reduced integral homology in degrees ``0..dimension``.

    The empty complex returns an empty list (its only reduced group sits in
    degree -1).
    """
    if not J.labels:
        return []
    top = J.dimension
    for d in range(top + 1):
        if J.count(d) > MAX_HOMOLOGY_SIMPLICES:
            raise SizeTooLarge(f"{J.count(d)} simplices in degree {d}")
    # shift by one so the augmentation target is degree 0
    dims = [1] + [J.count(d) for d in range(top + 1)]
    boundaries = {d + 1: boundary_matrix(J, d) for d in range(top + 1)}
    H = intlinalg.homology_from_boundaries(dims, boundaries)
    return H[1:]


def euler_characteristic(J: JoinComplex) -> int:
    """Reduced Euler characteristic from simplex counts."""
    return -1 + sum((-1) ** d * J.count(d) for d in range(J.dimension + 1))


def homology_euler(H: Sequence[AbelianGroup]) -> int:
    return sum((-1) ** d * g.rank for d, g in enumerate(H))


@dataclass(frozen=True)
class WedgeCheck:
    m: int
    k: int
    groups: tuple[AbelianGroup, ...]
    expected_rank: int
    passed: bool

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "reduced_homology": [{"degree": d, "rank": g.rank, "torsion": list(g.torsion)} for d, g in enumerate(self.groups)],
            "expected_top_rank": self.expected_rank,
            "pass": self.passed,
        }


def wedge_check(m: int, k: int) -> WedgeCheck:
    """Reduced homology of the ``(k+1)``-fold join of ``m`` points against ``(m-1)^{k+1}`` in degree ``k``."""
    J = build_join(range(m), k + 1)
    H = homology(J)
    expected = (m - 1) ** (k + 1)
    ok = all(g.is_zero for g in H[:k]) and H[k] == AbelianGroup(expected)
    ok = ok and euler_characteristic(J) == homology_euler(H)
    return WedgeCheck(m, k, tuple(H), expected, ok)

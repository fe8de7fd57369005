"""Exact integer linear algebra built on one Smith normal form routine.

Matrices are lists of rows of Python ints (or anything convertible). The
transform-tracking SNF here is exact for arbitrary sizes of integers;
:func:`invariant_factors` first tries the int64 kernel and falls back to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels

Matrix = list[list[int]]


def _as_matrix(A, nrows: int | None = None, ncols: int | None = None) -> Matrix:
    if isinstance(A, np.ndarray):
        return [[int(x) for x in row] for row in A.tolist()]
    M = [[int(x) for x in row] for row in A]
    if not M and nrows is not None:
        M = [[] for _ in range(nrows)]
    return M


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][t] * B[t][j] for t in range(inner)) for j in range(cols)] for i in range(len(A))]


def matvec(A: Matrix, x: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def transpose(A: Matrix, ncols: int | None = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal.

    ``diagonal`` lists the nonzero invariant factors, each dividing the next.
    """

    diagonal: tuple[int, ...]
    U: Matrix
    V: Matrix
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_form(A, ncols: int | None = None) -> SmithForm:
    """Exact Smith normal form with transforms.

    ``ncols`` is needed only when ``A`` has no rows.
    """
    M = _as_matrix(A)
    m = len(M)
    n = len(M[0]) if m else (ncols or 0)
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row dst += q * row src
        if q:
            rs, rd = M[src], M[dst]
            for c in range(n):
                rd[c] += q * rs[c]
            us, ud = U[src], U[dst]
            for c in range(m):
                ud[c] += q * us[c]

    def add_col(dst, src, q):  # col dst += q * col src
        if q:
            for row in M:
                row[dst] += q * row[src]
            for row in V:
                row[dst] += q * row[src]

    diag: list[int] = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = M[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = M[t][t]
            for i in range(t + 1, m):
                if M[i][t]:
                    add_row(i, t, -(M[i][t] // p))
            for j in range(t + 1, n):
                if M[t][j]:
                    add_col(j, t, -(M[t][j] // p))
            best = None
            for i in range(t + 1, m):
                if M[i][t] and (best is None or abs(M[i][t]) < best[0]):
                    best = (abs(M[i][t]), 0, i)
            for j in range(t + 1, n):
                if M[t][j] and (best is None or abs(M[t][j]) < best[0]):
                    best = (abs(M[t][j]), 1, j)
            if best is not None:
                if best[1] == 0:
                    swap_rows(t, best[2])
                else:
                    swap_cols(t, best[2])
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % p),
                None,
            )
            if bad is not None:
                add_row(t, bad, 1)
                continue
            break
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
        diag.append(M[t][t])
        t += 1
    return SmithForm(tuple(diag), U, V, (m, n))


def invariant_factors(A, use_jit: bool | None = None) -> list[int]:
    """Nonzero Smith invariants of ``A`` (fast int64 kernel when safe)."""
    arr = np.asarray(A, dtype=object)
    if arr.size == 0:
        return []
    try:
        a64 = np.asarray(A, dtype=np.int64)
    except OverflowError:
        a64 = None
    if a64 is not None:
        diag, ok = _kernels.snf_diagonal(a64, use_jit=use_jit)
        if ok:
            return sorted(int(d) for d in diag)
    return list(smith_form(_as_matrix(A)).diagonal)


def rank(A) -> int:
    return len(invariant_factors(A))


def kernel_basis(A, ncols: int | None = None) -> list[list[int]]:
    """Basis of the integer lattice ``{x : A x = 0}``."""
    sf = smith_form(A, ncols=ncols)
    n = sf.shape[1]
    return [[sf.V[i][j] for i in range(n)] for j in range(sf.rank, n)]


def solve(A, b: Sequence[int], ncols: int | None = None) -> list[int] | None:
    """An integer solution of ``A x = b`` or None."""
    M = _as_matrix(A)
    sf = smith_form(M, ncols=ncols)
    m, n = sf.shape
    c = matvec(sf.U, b)
    y = [0] * n
    for i in range(m):
        if i < sf.rank:
            d = sf.diagonal[i]
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    return matvec(sf.V, y)


def lattice_basis(vectors: Sequence[Sequence[int]], dim: int) -> list[list[int]]:
    """A basis of the span of ``vectors`` in ``Z^dim``."""
    vecs = [list(map(int, v)) for v in vectors if any(v)]
    if not vecs:
        return []
    G = transpose(vecs)  # dim x len(vecs), generators as columns
    sf = smith_form(G)
    GV = matmul(G, sf.V)
    return [[GV[i][j] for i in range(dim)] for j in range(sf.rank)]


def lattice_intersection(B1: Sequence[Sequence[int]], B2: Sequence[Sequence[int]], dim: int) -> list[list[int]]:
    """Basis of ``span(B1) ∩ span(B2)`` in ``Z^dim``."""
    if not B1 or not B2:
        return []
    cols = [list(v) for v in B1] + [[-x for x in v] for v in B2]
    A = transpose(cols)
    ker = kernel_basis(A, ncols=len(cols))
    r1 = len(B1)
    images = [[sum(k[j] * B1[j][i] for j in range(r1)) for i in range(dim)] for k in ker]
    return lattice_basis(images, dim)


def lattice_index(sub: Sequence[Sequence[int]], sup: Sequence[Sequence[int]]) -> int | None:
    """Index of ``span(sub)`` in ``span(sup)`` for equal-rank lattices.

    Returns None when ``sub`` is not contained in ``sup`` or ranks differ.
    """
    if len(sub) != len(sup):
        return None
    if not sup:
        return 1
    A = transpose([list(v) for v in sup])
    coords = []
    for v in sub:
        x = solve(A, v, ncols=len(sup))
        if x is None:
            return None
        coords.append(x)
    return abs(determinant(coords))


def determinant(A: Matrix) -> int:
    n = len(A)
    if n == 0:
        return 1
    sf = smith_form(A)
    if sf.rank < n:
        return 0
    prod = 1
    for d in sf.diagonal:
        prod *= d
    return prod * _unimodular_det(sf.U) * _unimodular_det(sf.V)


def _unimodular_det(U: Matrix) -> int:
    # Bareiss fraction-free elimination; exact for integer input.
    n = len(U)
    M = [row[:] for row in U]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^rank ⊕ Z/t1 ⊕ ...`` with ``t1 | t2 | ...`` all ``> 1``."""

    rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def homology_from_boundaries(dims: Sequence[int], boundaries: dict[int, object]) -> list[AbelianGroup]:
    """Homology of a free chain complex.

    ``dims[j]`` is the rank of ``C_j`` and ``boundaries[j]`` the matrix of
    ``C_j -> C_{j-1}`` (shape ``dims[j-1] x dims[j]``); missing maps are zero.
    """
    factors: dict[int, list[int]] = {}
    for j, B in boundaries.items():
        factors[j] = invariant_factors(B) if np.asarray(B).size else []
    out = []
    for j, d in enumerate(dims):
        rank_out = len(factors.get(j, []))
        inc = factors.get(j + 1, [])
        torsion = tuple(sorted(f for f in inc if f > 1))
        out.append(AbelianGroup(d - rank_out - len(inc), torsion))
    return out


def subquotient(
    maps: Sequence[Matrix],
    dims: Sequence[int],
    relations: Sequence[Sequence[Sequence[int]]],
) -> list[AbelianGroup]:
    """Cohomology of a cochain complex of finitely generated abelian groups.

    Degree ``j`` is ``Z^dims[j] / span(relations[j])``; ``maps[j]`` is the
    integer matrix lifting ``C^j -> C^{j+1}`` (shape ``dims[j+1] x dims[j]``)
    and must send relations into relations.
    """
    out = []
    top = len(dims)
    for j in range(top):
        n = dims[j]
        # cocycles: x with maps[j] x in span(relations[j+1])
        if j + 1 < top and dims[j + 1]:
            A = maps[j]
            R = relations[j + 1]
            cols = [[A[i][c] for i in range(dims[j + 1])] for c in range(n)]
            cols += [[-x for x in r] for r in R]
            ker = kernel_basis(transpose(cols), ncols=len(cols))
            cocycles = lattice_basis([k[:n] for k in ker], n)
        else:
            cocycles = identity(n)
        gens = [list(r) for r in relations[j]]
        if j > 0 and dims[j - 1]:
            A = maps[j - 1]
            gens += [[A[i][c] for i in range(n)] for c in range(dims[j - 1])]
        gens = [g for g in gens if any(g)]
        if not cocycles:
            out.append(AbelianGroup(0))
            continue
        Z = transpose(cocycles)
        coords = []
        for g in gens:
            x = solve(Z, g, ncols=len(cocycles))
            if x is None:
                raise ArithmeticError("boundary not contained in cocycles")
            coords.append(x)
        diag = list(smith_form(transpose(coords)).diagonal) if coords else []
        torsion = tuple(d for d in diag if d > 1)
        out.append(AbelianGroup(len(cocycles) - len(diag), torsion))
    return out

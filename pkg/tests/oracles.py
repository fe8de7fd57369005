"""Independent models of the catalog groups, used only by tests.

Each group gets a faithful integer matrix representation; products are
checked by multiplying matrices instead of using the exponent formulas.
"""

import numpy as np

from bredon_tc.groups import GroupElement


def _mat(rows):
    return np.array(rows, dtype=object)


def _mpow(M, n):
    n_abs = abs(n)
    out = np.eye(M.shape[0], dtype=object)
    base = M if n >= 0 else _inv(M)
    for _ in range(n_abs):
        out = out.dot(base)
    return out


def _inv(M):
    # all generators here are unimodular with small entries
    inv = np.linalg.inv(M.astype(float))
    return np.array(np.round(inv).astype(int), dtype=object)


# Klein: a(x, y) = (x + 1, y), b(x, y) = (-x, y + 1) as affine maps
KLEIN_A = _mat([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
KLEIN_B = _mat([[-1, 0, 0], [0, 1, 1], [0, 0, 1]])

# Heisenberg: unipotent upper triangular matrices, c = a b a^-1 b^-1
HEIS_A = _mat([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
HEIS_B = _mat([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
HEIS_C = HEIS_A.dot(HEIS_B).dot(_inv(HEIS_A)).dot(_inv(HEIS_B))

# F_2 embeds in SL(2, Z) via these two matrices
FREE_A = _mat([[1, 2], [0, 1]])
FREE_B = _mat([[1, 0], [2, 1]])


def matrix_of(g: GroupElement):
    kind = g.group.kind
    if kind == "klein":
        m, n = g.data
        return _mpow(KLEIN_A, m).dot(_mpow(KLEIN_B, n))
    if kind == "heisenberg":
        p, q, r = g.data
        return _mpow(HEIS_A, p).dot(_mpow(HEIS_B, q)).dot(_mpow(HEIS_C, r))
    if kind == "free":
        if g.group.rank != 2:
            raise ValueError("matrix model only for F_2")
        out = np.eye(2, dtype=object)
        for letter in g.data:
            M = FREE_A if abs(letter) == 1 else FREE_B
            out = out.dot(M if letter > 0 else _inv(M))
        return out
    if kind == "z":
        k = g.group.rank
        out = np.eye(k + 1, dtype=object)
        out[:k, k] = list(g.data)
        return out
    raise ValueError(kind)


def same_matrix(A, B) -> bool:
    return bool((A == B).all())


def leibniz_det(M):
    """Determinant by permutation expansion (tiny matrices only)."""
    from itertools import permutations

    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= M[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total

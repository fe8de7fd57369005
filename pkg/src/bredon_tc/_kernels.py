"""Hot numeric kernels.

Each kernel has a numba ``@njit`` implementation and a numpy (or plain
Python) fallback with identical semantics. Set ``BREDON_TC_DISABLE_JIT=1`` to
force the fallback path; it is also used when numba is not importable.

All kernels work on ``int64`` arrays. The Smith diagonal kernel reports
failure instead of overflowing; callers then redo the computation with
Python integers.
"""

from __future__ import annotations

import os

import numpy as np

# Entries above this bound could overflow int64 during one elimination step.
ENTRY_LIMIT = 1 << 31

_DISABLED = os.environ.get("BREDON_TC_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLED:
        raise ImportError
    from numba import njit
except ImportError:  # pragma: no cover - exercised by the fallback CI job
    njit = None

JIT_ENABLED = njit is not None


# ---------------------------------------------------------------------------
# Smith normal form diagonal
# ---------------------------------------------------------------------------


def _snf_diag_numpy(A: np.ndarray) -> tuple[np.ndarray, bool]:
    A = np.array(A, dtype=np.int64, copy=True)
    m, n = A.shape
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        sub = np.abs(A[t:, t:])
        nz = sub > 0
        if not nz.any():
            break
        masked = np.where(nz, sub, np.iinfo(np.int64).max)
        bi, bj = np.unravel_index(np.argmin(masked), masked.shape)
        A[[t, t + bi], :] = A[[t + bi, t], :]
        A[:, [t, t + bj]] = A[:, [t + bj, t]]
        while True:
            p = A[t, t]
            q = A[t + 1 :, t] // p
            A[t + 1 :, t:] -= np.outer(q, A[t, t:])
            q = A[t, t + 1 :] // p
            A[t:, t + 1 :] -= np.outer(A[t:, t], q)
            if np.abs(A).max(initial=0) > ENTRY_LIMIT:
                return np.zeros(0, dtype=np.int64), False
            col = A[t + 1 :, t]
            row = A[t, t + 1 :]
            if col.any() or row.any():
                # Euclid step: move the smallest nonzero remainder to the pivot.
                cands = [(abs(int(v)), 0, i) for i, v in enumerate(col) if v]
                cands += [(abs(int(v)), 1, j) for j, v in enumerate(row) if v]
                _, kind, idx = min(cands)
                if kind == 0:
                    A[[t, t + 1 + idx], :] = A[[t + 1 + idx, t], :]
                else:
                    A[:, [t, t + 1 + idx]] = A[:, [t + 1 + idx, t]]
                continue
            rest = A[t + 1 :, t + 1 :]
            bad = np.argwhere(rest % A[t, t] != 0)
            if len(bad):
                A[t, :] += A[t + 1 + bad[0][0], :]
                continue
            break
        diag.append(abs(int(A[t, t])))
        t += 1
    return np.array(diag, dtype=np.int64), True


def _snf_diag_loops(A):
    A = A.copy()
    m, n = A.shape
    r = min(m, n)
    diag = np.zeros(r, dtype=np.int64)
    t = 0
    while t < r:
        best = 0
        bi = -1
        bj = -1
        for i in range(t, m):
            for j in range(t, n):
                v = abs(A[i, j])
                if v != 0 and (best == 0 or v < best):
                    best = v
                    bi = i
                    bj = j
        if best == 0:
            break
        for j in range(n):
            tmp = A[t, j]
            A[t, j] = A[bi, j]
            A[bi, j] = tmp
        for i in range(m):
            tmp = A[i, t]
            A[i, t] = A[i, bj]
            A[i, bj] = tmp
        while True:
            p = A[t, t]
            for i in range(t + 1, m):
                if A[i, t] != 0:
                    q = A[i, t] // p
                    for j in range(t, n):
                        A[i, j] -= q * A[t, j]
                        if abs(A[i, j]) > ENTRY_LIMIT:
                            return diag[:0], False
            for j in range(t + 1, n):
                if A[t, j] != 0:
                    q = A[t, j] // p
                    for i in range(t, m):
                        A[i, j] -= q * A[i, t]
                        if abs(A[i, j]) > ENTRY_LIMIT:
                            return diag[:0], False
            # smallest nonzero remainder in pivot row/column
            best = 0
            kind = -1
            idx = -1
            for i in range(t + 1, m):
                v = abs(A[i, t])
                if v != 0 and (best == 0 or v < best):
                    best = v
                    kind = 0
                    idx = i
            for j in range(t + 1, n):
                v = abs(A[t, j])
                if v != 0 and (best == 0 or v < best):
                    best = v
                    kind = 1
                    idx = j
            if kind == 0:
                for j in range(n):
                    tmp = A[t, j]
                    A[t, j] = A[idx, j]
                    A[idx, j] = tmp
                continue
            if kind == 1:
                for i in range(m):
                    tmp = A[i, t]
                    A[i, t] = A[i, idx]
                    A[i, idx] = tmp
                continue
            bad = -1
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i, j] % A[t, t] != 0:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad >= 0:
                for j in range(n):
                    A[t, j] += A[bad, j]
                continue
            break
        diag[t] = abs(A[t, t])
        t += 1
    return diag[:t], True


# ---------------------------------------------------------------------------
# Batch commutation tables
# ---------------------------------------------------------------------------
# kind codes: 0 abelian, 1 Klein (m, n), 2 Heisenberg (p, q, r)


def _commute_numpy(kind: int, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    if kind == 0:
        return np.ones((X.shape[0], Y.shape[0]), dtype=np.bool_)
    if kind == 1:
        m, n = X[:, 0:1], X[:, 1:2]
        mp, np_ = Y[:, 0][None, :], Y[:, 1][None, :]
        sx = 1 - 2 * (n & 1)
        sy = 1 - 2 * (np_ & 1)
        # first coordinates of x*y and y*x; second coordinates always agree
        return (m + sx * mp) == (mp + sy * m)
    p, q = X[:, 0:1], X[:, 1:2]
    pp, qp = Y[:, 0][None, :], Y[:, 1][None, :]
    # third coordinates of x*y and y*x (the rest agree)
    return (-q * pp) == (-qp * p)


def _commute_loops(kind, X, Y):
    n = X.shape[0]
    m = Y.shape[0]
    out = np.ones((n, m), dtype=np.bool_)
    if kind == 0:
        return out
    for i in range(n):
        for j in range(m):
            if kind == 1:
                sx = 1 - 2 * (X[i, 1] & 1)
                sy = 1 - 2 * (Y[j, 1] & 1)
                out[i, j] = (X[i, 0] + sx * Y[j, 0]) == (Y[j, 0] + sy * X[i, 0])
            else:
                out[i, j] = (-X[i, 1] * Y[j, 0]) == (-Y[j, 1] * X[i, 0])
    return out


def _free_product_equal(u, lu, v, lv):
    # Compare reduced(u v) with reduced(v u) for reduced words u, v.
    i = 0
    while i < lu and i < lv and u[lu - 1 - i] == -v[i]:
        i += 1
    k = 0
    while k < lv and k < lu and v[lv - 1 - k] == -u[k]:
        k += 1
    la = lu + lv - 2 * i
    lb = lu + lv - 2 * k
    if la != lb:
        return False
    for pos in range(la):
        if pos < lu - i:
            a = u[pos]
        else:
            a = v[pos - (lu - i) + i]
        if pos < lv - k:
            b = v[pos]
        else:
            b = u[pos - (lv - k) + k]
        if a != b:
            return False
    return True


def _free_commute_loops(XW, XL, YW, YL):
    n = XW.shape[0]
    m = YW.shape[0]
    out = np.zeros((n, m), dtype=np.bool_)
    for i in range(n):
        for j in range(m):
            out[i, j] = _free_product_equal(XW[i], XL[i], YW[j], YL[j])
    return out


def _free_commute_python(XW, XL, YW, YL):
    from .groups import free_mul

    xs = [tuple(int(c) for c in XW[i, : XL[i]]) for i in range(XW.shape[0])]
    ys = [tuple(int(c) for c in YW[j, : YL[j]]) for j in range(YW.shape[0])]
    out = np.zeros((len(xs), len(ys)), dtype=np.bool_)
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            out[i, j] = free_mul(x, y) == free_mul(y, x)
    return out


if JIT_ENABLED:
    _snf_diag_jit = njit(cache=True)(_snf_diag_loops)
    _commute_jit = njit(cache=True)(_commute_loops)
    _free_product_equal_jit = njit(cache=True)(_free_product_equal)

    @njit(cache=True)
    def _free_commute_jit(XW, XL, YW, YL):
        n = XW.shape[0]
        m = YW.shape[0]
        out = np.zeros((n, m), dtype=np.bool_)
        for i in range(n):
            for j in range(m):
                out[i, j] = _free_product_equal_jit(XW[i], XL[i], YW[j], YL[j])
        return out


# ---------------------------------------------------------------------------
# Public dispatchers
# ---------------------------------------------------------------------------


def snf_diagonal(A: np.ndarray, use_jit: bool | None = None) -> tuple[np.ndarray, bool]:
    """Nonzero Smith invariants of an int64 matrix, plus an ok flag.

    ``ok`` is False when an intermediate entry left the safe int64 range.
    """
    A = np.ascontiguousarray(A, dtype=np.int64)
    if A.size == 0:
        return np.zeros(0, dtype=np.int64), True
    if np.abs(A).max() > ENTRY_LIMIT:
        return np.zeros(0, dtype=np.int64), False
    if use_jit is None:
        use_jit = JIT_ENABLED
    if use_jit and JIT_ENABLED:
        return _snf_diag_jit(A)
    return _snf_diag_numpy(A)


def commute_table(kind: int, X: np.ndarray, Y: np.ndarray, use_jit: bool | None = None) -> np.ndarray:
    """``out[i, j]`` is True iff ``X[i]`` and ``Y[j]`` commute."""
    X = np.ascontiguousarray(X, dtype=np.int64)
    Y = np.ascontiguousarray(Y, dtype=np.int64)
    if use_jit is None:
        use_jit = JIT_ENABLED
    if use_jit and JIT_ENABLED:
        return _commute_jit(kind, X, Y)
    return _commute_numpy(kind, X, Y)


def free_commute_table(XW, XL, YW, YL, use_jit: bool | None = None) -> np.ndarray:
    """Commutation table for padded free-group words (letters ``±1..±k``)."""
    if use_jit is None:
        use_jit = JIT_ENABLED
    if use_jit and JIT_ENABLED:
        return _free_commute_jit(
            np.ascontiguousarray(XW, dtype=np.int64),
            np.ascontiguousarray(XL, dtype=np.int64),
            np.ascontiguousarray(YW, dtype=np.int64),
            np.ascontiguousarray(YL, dtype=np.int64),
        )
    return _free_commute_python(XW, XL, YW, YL)

"""Compare the numba kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel is run once to warm the JIT cache, then timed; outputs from both
paths are compared before any timing is reported.
"""

import argparse
import time

import numpy as np

from bredon_tc import _kernels
from bredon_tc.centralizers import _kind_code, pack_words
from bredon_tc.groups import Free, Heisenberg, Klein, ball
from bredon_tc.joins import boundary_matrix, build_join


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_snf(repeat):
    # boundary matrices are what the package feeds this kernel
    A = np.array(boundary_matrix(build_join(range(6), 3), 2), dtype=np.int64)
    a = _kernels.snf_diagonal(A, use_jit=True)
    b = _kernels.snf_diagonal(A, use_jit=False)
    assert a[1] and b[1] and sorted(a[0]) == sorted(b[0])
    return _time(lambda: _kernels.snf_diagonal(A, use_jit=True), repeat), _time(
        lambda: _kernels.snf_diagonal(A, use_jit=False), repeat
    )


def bench_commute(group, radius, repeat):
    B = ball(group, radius)
    X = np.array([g.data for g in B], dtype=np.int64)
    code = _kind_code(group)
    a = _kernels.commute_table(code, X, X, use_jit=True)
    b = _kernels.commute_table(code, X, X, use_jit=False)
    assert (a == b).all()
    return _time(lambda: _kernels.commute_table(code, X, X, use_jit=True), repeat), _time(
        lambda: _kernels.commute_table(code, X, X, use_jit=False), repeat
    )


def bench_free(radius, repeat):
    B = ball(Free(2), radius)
    W, L = pack_words(B)
    a = _kernels.free_commute_table(W, L, W, L, use_jit=True)
    b = _kernels.free_commute_table(W, L, W, L, use_jit=False)
    assert (a == b).all()
    return _time(lambda: _kernels.free_commute_table(W, L, W, L, use_jit=True), repeat), _time(
        lambda: _kernels.free_commute_table(W, L, W, L, use_jit=False), 1
    )


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    if not _kernels.JIT_ENABLED:
        print("numba unavailable or disabled; both columns use the fallback")
    rows = [
        ("snf 108x216 boundary", bench_snf(args.repeat)),
        ("commute Klein r=6", bench_commute(Klein(), 6, args.repeat)),
        ("commute Heisenberg r=5", bench_commute(Heisenberg(), 5, args.repeat)),
        ("commute F_2 r=4", bench_free(4, args.repeat)),
    ]
    print(f"{'kernel':26s} {'jit (s)':>10s} {'fallback (s)':>13s} {'speedup':>8s}")
    for name, (jit, fb) in rows:
        print(f"{name:26s} {jit:10.5f} {fb:13.5f} {fb / jit:8.1f}x")


if __name__ == "__main__":
    main()

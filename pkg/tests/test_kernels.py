import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bredon_tc import _kernels
from bredon_tc.centralizers import commute_matrix, pack_words
from bredon_tc.groups import Free, Heisenberg, Klein, ball, commutes

pytestmark = pytest.mark.skipif(not _kernels.JIT_ENABLED, reason="numba disabled")


@pytest.mark.parametrize("group", [Klein(), Heisenberg(), Free(2), Free(3)])
def test_commute_table_matches_pairwise(group):
    B = ball(group, 3)
    for use_jit in (True, False):
        T = commute_matrix(B, B, use_jit=use_jit)
        for i, g in enumerate(B):
            for j, h in enumerate(B):
                assert T[i, j] == commutes(g, h)


@given(st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)), min_size=1, max_size=12))
def test_commute_kernel_paths_agree(rows):
    X = np.array(rows, dtype=np.int64)
    for kind in (1, 2):
        Y = X[:, :2].copy() if kind == 1 else X
        Xk = X[:, :2].copy() if kind == 1 else X
        a = _kernels.commute_table(kind, Xk, Y, use_jit=True)
        b = _kernels.commute_table(kind, Xk, Y, use_jit=False)
        assert (a == b).all()


def test_free_kernel_paths_agree():
    B = ball(Free(2), 3)
    W, L = pack_words(B)
    a = _kernels.free_commute_table(W, L, W, L, use_jit=True)
    b = _kernels.free_commute_table(W, L, W, L, use_jit=False)
    assert (a == b).all()


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=5))
def test_snf_kernel_paths_agree(rows):
    A = np.array(rows, dtype=np.int64)
    d1, ok1 = _kernels.snf_diagonal(A, use_jit=True)
    d2, ok2 = _kernels.snf_diagonal(A, use_jit=False)
    assert ok1 == ok2
    if ok1:
        assert sorted(d1.tolist()) == sorted(d2.tolist())


def test_snf_overflow_guard_reports_failure():
    A = np.array([[1 << 40, 3], [5, 7]], dtype=np.int64)
    _, ok = _kernels.snf_diagonal(A)
    assert not ok


def test_disable_flag_selects_fallback():
    env = dict(os.environ, BREDON_TC_DISABLE_JIT="1")
    out = subprocess.run(
        [sys.executable, "-c", "from bredon_tc import _kernels; print(_kernels.JIT_ENABLED)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "False"


def test_fallback_process_computes_same_answers():
    env = dict(os.environ, BREDON_TC_DISABLE_JIT="1")
    code = (
        "from bredon_tc.principality import property_n_witness_search as s;"
        "from bredon_tc.groups import Klein;"
        "from bredon_tc.bredon import cd_d_report;"
        "print(s(Klein(), 3, 2).to_json(), cd_d_report(3).ranks)"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "{'a': 'c', 'S': ['x'], 'n': 2} [1, 3, 3, 1]"

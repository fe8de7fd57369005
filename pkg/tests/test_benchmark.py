import subprocess
import sys
from pathlib import Path

import pytest

from bredon_tc import _kernels

BENCH = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"


@pytest.mark.skipif(not _kernels.JIT_ENABLED, reason="benchmark compares against numba")
def test_benchmark_runs_and_agrees():
    out = subprocess.run([sys.executable, str(BENCH), "--repeat", "1"], capture_output=True, text=True, check=True)
    lines = out.stdout.strip().splitlines()
    assert lines[0].startswith("kernel") and len(lines) == 5

import importlib.util
from pathlib import Path

import pytest

from gl2hopf import _kernels

BENCH = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"


@pytest.mark.skipif(_kernels.numba_impl is None, reason="numba not installed")
def test_benchmark_runs_and_backends_agree(capsys):
    mspec = importlib.util.spec_from_file_location("bench_kernels", BENCH)
    mod = importlib.util.module_from_spec(mspec)
    mspec.loader.exec_module(mod)
    assert mod.main(["--mod", "3", "--pairs", "2000", "--repeat", "1"]) == 0
    out = capsys.readouterr().out
    assert "closure GL2(Z/3)" in out and "disagree" not in out

"""The compiled kernels and the pure-Python fallback must agree exactly."""

import pytest

from coxeuler import _pykernels, kernels
from coxeuler.signed import rule_arrays

compiled = pytest.importorskip("coxeuler._kernels")


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("n", range(2, 7))
def test_sub_census_parity(n):
    assert compiled.sub_census(n) == _pykernels.sub_census(n)


@pytest.mark.parametrize("family", ["A", "B", "D"])
@pytest.mark.parametrize("n", range(2, 7))
def test_eulerian_census_parity(n, family):
    assert list(compiled.eulerian_census(n, family)) == list(_pykernels.eulerian_census(n, family))


@pytest.mark.parametrize("n", range(2, 7))
def test_hat_scan_parity(n):
    assert compiled.hat_scan(n) is None
    assert _pykernels.hat_scan(n) is None


@pytest.mark.parametrize("n", range(3, 7))
def test_insertion_scan_parity(n):
    assert compiled.insertion_scan(n, *rule_arrays()) == _pykernels.insertion_scan(n)


def test_compiled_rejects_out_of_range():
    with pytest.raises((ValueError, OverflowError)):
        compiled.sub_census(13)
    with pytest.raises((ValueError, OverflowError)):
        compiled.insertion_scan(10, *rule_arrays())


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled backend disabled")
def test_wrapper_backend_override():
    assert kernels.sub_census(5, "python") == kernels.sub_census(5, "cython")
    assert kernels.insertion_scan(5, backend="python") == kernels.insertion_scan(5, backend="cython")


def test_fallback_selected_by_environment():
    import os
    import subprocess
    import sys

    env = dict(os.environ, COXEULER_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from coxeuler import kernels, tables; "
         "print(kernels.BACKEND, tables.verify_insertion(5).passed)"],
        capture_output=True, text=True, env=env, check=True,
    ).stdout.split()
    assert out == ["python", "True"]

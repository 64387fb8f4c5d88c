import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from isingsym import kernels
from isingsym._kernels_py import fwht as fwht_py


def hadamard_matrix(n):
    h = np.array([[1.0, 1.0], [1.0, -1.0]])
    out = np.array([[1.0]])
    for _ in range(n):
        out = np.kron(out, h)
    return out


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 9), st.integers(0, 10_000))
def test_python_kernel_matches_dense_hadamard(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    expect = hadamard_matrix(n) @ a
    buf = a.copy()
    fwht_py(buf)
    np.testing.assert_allclose(buf, expect, atol=1e-10)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 10), st.integers(0, 10_000))
def test_selected_backend_matches_python(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    via_selected = a.copy()
    kernels.fwht(via_selected)
    via_python = a.copy()
    fwht_py(via_python)
    np.testing.assert_allclose(via_selected, via_python, atol=1e-12)


def test_backend_name_is_valid():
    assert kernels.BACKEND in ("cython", "python")


def test_env_var_forces_python_backend():
    code = (
        "import os; os.environ['ISINGSYM_PURE_PYTHON'] = '1'; "
        "from isingsym import kernels; print(kernels.BACKEND)"
    )
    proc = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, check=True
    )
    assert proc.stdout.strip() == "python"


def test_kernel_is_in_place():
    a = np.ones(8, dtype=complex)
    kernels.fwht(a)
    assert a[0] == 8.0 and np.allclose(a[1:], 0.0)

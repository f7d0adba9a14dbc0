from __future__ import annotations

import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from g2torsion._kernels import BACKEND, compiled_rref_integer, python_rref_integer

ints = st.integers(min_value=-(2**40), max_value=2**40)
rows = st.lists(st.lists(ints, min_size=6, max_size=6), min_size=1, max_size=7)
needs_compiled = pytest.mark.skipif(compiled_rref_integer is None, reason="compiled kernel not built")


def test_backend_name():
    assert BACKEND in ("cython", "python")


def test_python_kernel_contract():
    red, piv = python_rref_integer([[2, 4, 6], [1, 2, 4], [0, 0, 0]], 3)
    assert piv == [0, 2]
    assert red == [[1, 2, 0], [0, 0, 1]]


@needs_compiled
@given(rows)
def test_kernels_agree(m):
    assert python_rref_integer(m, 6) == compiled_rref_integer(m, 6)


@needs_compiled
def test_kernels_agree_near_word_size():
    big = 2**31 - 1
    m = [[big, -big, 3, 2**62, 1, 0], [big - 1, big, -7, 5, 2**31, 1], [1, 2, 3, 4, 5, 6]]
    assert python_rref_integer(m, 6) == compiled_rref_integer(m, 6)


def test_environment_forces_fallback():
    env = dict(os.environ, G2TORSION_KERNEL="python")
    out = subprocess.run([sys.executable, "-c", "import g2torsion._kernels as k; print(k.BACKEND)"], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"

"""Hot kernels with a compiled implementation and a pure-Python fallback.

The compiled module is used when it was built; setting the environment
variable ``G2TORSION_KERNEL=python`` forces the fallback.
"""
from __future__ import annotations

import os

from . import _pyrref

python_rref_integer = _pyrref.rref_integer

try:
    if os.environ.get("G2TORSION_KERNEL", "").lower() == "python":
        raise ImportError("compiled kernels disabled by environment")
    from ._crref import rref_integer as compiled_rref_integer
except ImportError:
    compiled_rref_integer = None

if compiled_rref_integer is not None:
    rref_integer = compiled_rref_integer
    BACKEND = "cython"
else:
    rref_integer = python_rref_integer
    BACKEND = "python"

__all__ = ["BACKEND", "rref_integer", "python_rref_integer", "compiled_rref_integer"]

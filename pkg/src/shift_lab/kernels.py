"""Kernel selection: compiled row reduction if available, else pure Python.

Set SHIFT_LAB_PURE=1 in the environment to force the fallback (used by
the benchmark and by tests that cross-validate the two backends).
"""

import os

from . import _rowred_py

try:
    from . import _rowred as _compiled
except ImportError:
    _compiled = None

if _compiled is not None and not os.environ.get("SHIFT_LAB_PURE"):
    _impl = _compiled
    BACKEND = "compiled"
else:
    _impl = _rowred_py
    BACKEND = "python"


def echelon(A, p):
    """RREF of the uint64 matrix A in place, mod p; returns pivot columns."""
    return _impl.echelon(A, p)


def reduce_rows(R, pivots, V, p):
    """Reduce rows of V against the RREF matrix R (pivot columns given)."""
    return _impl.reduce_rows(R, pivots, V, p)


def get_backends():
    """Both kernel modules, for cross-checking; compiled may be None."""
    return {"compiled": _compiled, "python": _rowred_py}

"""Backend selection for the bitmask kernels.

The compiled extension is used when it imports and the digraph fits in 64
vertices; otherwise the pure-Python module handles the call.  Setting
``COREFLEX_PURE_PYTHON=1`` in the environment disables the extension.
"""

import os

from coreflex import _pykernels

try:
    if os.environ.get("COREFLEX_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("compiled kernels disabled by environment")
    from coreflex import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
FAST_LIMIT = 64


def backends():
    """Map of backend name to kernel module, for tests and benchmarks."""
    found = {"python": _pykernels}
    if _ckernels is not None:
        found["cython"] = _ckernels
    return found


def select(n):
    if _ckernels is not None and n <= FAST_LIMIT:
        return _ckernels
    return _pykernels


def transpose(rows, n):
    return select(n).transpose(rows, n)


def bool_power(rows, k):
    return select(len(rows)).bool_power(rows, k)


def bool_matmul(a, b):
    return select(len(b)).bool_matmul(a, b)


def sat_power(rows, k):
    return select(len(rows)).sat_power(rows, k)


def sat_matmul(a1, a2, b1, b2):
    return select(len(b1)).sat_matmul(a1, a2, b1, b2)


def image(rows, mask):
    return select(len(rows)).image(rows, mask)


def closure(rows, cols, seed):
    return select(len(rows)).closure(rows, cols, seed)


def coreset_labels(rows, cols, n):
    return select(n).coreset_labels(rows, cols, n)


def identical_or_disjoint(rows):
    return select(len(rows)).identical_or_disjoint(rows)

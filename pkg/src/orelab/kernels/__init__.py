"""Hot numeric kernels with a compiled and a pure-numpy backend.

The backend is fixed at import time: numba unless ``ORELAB_NO_JIT`` is set
to a non-empty value other than ``0`` (or numba is not importable).  Both
backends produce identical results; only speed differs.
"""

from __future__ import annotations

import os

import numpy as np

from .tables import subset_table, subset_words


def _want_jit() -> bool:
    flag = os.environ.get("ORELAB_NO_JIT", "")
    if flag and flag != "0":
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


USE_JIT = _want_jit()

if USE_JIT:
    from . import _jit as _impl
else:
    from . import _numpy as _impl

BACKEND = "numba" if USE_JIT else "numpy"

ore_scan = _impl.ore_scan
ore_dense = _impl.ore_dense
graph_scan = _impl.graph_scan


def incidence(mem: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """CSR vertex -> edge-index lists, each list in edge order."""
    m, r = mem.shape
    owner = np.repeat(np.arange(m, dtype=np.int64), r)
    verts = mem.ravel()
    order = np.lexsort((owner, verts))
    idx = owner[order]
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(verts, minlength=n), out=ptr[1:])
    return ptr, np.ascontiguousarray(idx)


def matching_search(lo, hi, mem, n, r, target):
    """Run the branch-and-bound matching kernel; returns (size, edge indices)."""
    if lo.shape[0] == 0:
        return 0, np.empty(0, dtype=np.int64)
    ptr, idx = incidence(mem, n)
    size, chosen = _impl.matching_search(lo, hi, mem, n, r, int(target), ptr, idx)
    size = int(size)
    return size, chosen[:size].copy()


__all__ = [
    "BACKEND",
    "USE_JIT",
    "graph_scan",
    "incidence",
    "matching_search",
    "ore_dense",
    "ore_scan",
    "subset_table",
    "subset_words",
]

"""Cached colex-ordered r-subset tables shared by both backends."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

# Rows x r entries above this are refused; desk-scale work stays far below.
TABLE_LIMIT = 60_000_000


@lru_cache(maxsize=32)
def subset_table(n: int, r: int) -> np.ndarray:
    """All r-subsets of {0..n-1} as rows of sorted indices, in colex order.

    Row ``k`` is the subset of colex rank ``k``.
    """
    rows = comb(n, r)
    if rows * max(r, 1) > TABLE_LIMIT:
        raise MemoryError(f"C({n},{r}) = {rows} rows exceeds the table limit")
    if r == 0:
        return np.zeros((1, 0), dtype=np.int64)
    flat = np.fromiter(
        (v for c in combinations(range(n), r) for v in c), dtype=np.int64, count=rows * r
    ).reshape(rows, r)
    order = np.lexsort(flat.T)
    table = np.ascontiguousarray(flat[order])
    table.setflags(write=False)
    return table


@lru_cache(maxsize=32)
def subset_words(n: int, r: int) -> tuple[np.ndarray, np.ndarray]:
    """(lo, hi) uint64 bitmask words for every row of :func:`subset_table`."""
    table = subset_table(n, r)
    lo = np.zeros(table.shape[0], dtype=np.uint64)
    hi = np.zeros(table.shape[0], dtype=np.uint64)
    one = np.uint64(1)
    for j in range(table.shape[1]):
        col = table[:, j]
        low = col < 64
        lo[low] |= one << col[low].astype(np.uint64)
        hi[~low] |= one << (col[~low] - 64).astype(np.uint64)
    lo.setflags(write=False)
    hi.setflags(write=False)
    return lo, hi

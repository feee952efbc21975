"""Lazily computed quantities of one hypergraph instance.

A View wraps either a built :class:`Hypergraph` or the annealer's dense
edge-membership vector, so registry predicates are written once and shared
by ``check`` and ``hunt``.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .. import kernels
from ..hypergraph import (
    Hypergraph,
    is_hm_subfamily,
    is_intersecting,
    is_t_intersecting,
    min_pairwise_intersection,
    ore_degree,
    popcount,
)
from ..setcore import binom


class View:
    def __init__(self, n: int, r: int, *, hypergraph: Hypergraph | None = None,
                 is_edge: np.ndarray | None = None, deg: np.ndarray | None = None,
                 conflict_free: int | None = None):
        self.n = n
        self.r = r
        self._H = hypergraph
        self._is_edge = is_edge
        self._deg = deg
        # pairwise-intersection threshold the dense state is known to satisfy
        self._conflict_free = conflict_free
        self._nu: dict[int, int] = {}

    @classmethod
    def of(cls, H: Hypergraph) -> View:
        return cls(H.n, H.r, hypergraph=H)

    @cached_property
    def edge_index(self) -> np.ndarray:
        if self._is_edge is not None:
            return np.flatnonzero(self._is_edge)
        return self._H.ranks

    @cached_property
    def hypergraph(self) -> Hypergraph:
        if self._H is not None:
            return self._H
        return Hypergraph.from_ranks(self.n, self.r, self.edge_index)

    @cached_property
    def m(self) -> int:
        if self._H is not None:
            return len(self._H)
        return int(self.edge_index.size)

    @cached_property
    def deg(self) -> np.ndarray:
        return self._H.deg_array if self._H is not None else self._deg

    @cached_property
    def max_degree(self) -> int:
        return int(self.deg.max()) if self.n else 0

    @cached_property
    def min_degree(self) -> int:
        return int(self.deg.min()) if self.n else 0

    @cached_property
    def regular(self) -> int | None:
        return self.max_degree if self.max_degree == self.min_degree else None

    @cached_property
    def complete(self) -> bool:
        return self.m == binom(self.n, self.r)

    @cached_property
    def _arrays(self):
        if self._H is not None:
            lo, hi = self._H.words
            return lo, hi, self._H.member_array
        idx = self.edge_index
        lo, hi = kernels.subset_words(self.n, self.r)
        return lo[idx], hi[idx], kernels.subset_table(self.n, self.r)[idx]

    @cached_property
    def sigma_full(self):
        """(value, witness mask); value None when the hypergraph is complete."""
        if self._H is not None:
            o = ore_degree(self._H)
            return o.value, o.witness
        if self.complete:
            return None, None
        table = kernels.subset_table(self.n, self.r)
        value, idx = kernels.ore_dense(table, self._is_edge, self._deg)
        lo, hi = kernels.subset_words(self.n, self.r)
        return int(value), int(lo[idx]) | (int(hi[idx]) << 64)

    @property
    def sigma(self) -> int | None:
        return self.sigma_full[0]

    def sigma_above(self, bound: int) -> bool:
        """sigma > bound, with Unbounded exceeding everything."""
        return self.sigma is None or self.sigma > bound

    def nu_capped(self, k: int) -> int:
        """min(matching number, k)."""
        if k not in self._nu:
            if k <= 0:
                self._nu[k] = 0
            elif self.r == 0:
                self._nu[k] = min(self.m, 1, k)
            elif self.m == 0 or k * self.r > self.n and self.n // self.r < 1:
                self._nu[k] = 0
            else:
                lo, hi, mem = self._arrays
                size, _ = kernels.matching_search(lo, hi, mem, self.n, self.r, k)
                self._nu[k] = min(size, k)
        return self._nu[k]

    @cached_property
    def nu(self) -> int:
        return self.nu_capped(self.n // self.r if self.r else 1)

    @cached_property
    def common(self) -> int:
        """Mask of vertices in every edge; all of [n] when there are none."""
        if self.m == 0:
            return (1 << self.n) - 1
        lo, hi, _ = self._arrays
        return int(np.bitwise_and.reduce(lo)) | (int(np.bitwise_and.reduce(hi)) << 64)

    @property
    def trivial(self) -> bool:
        return self.m == 0 or self.common != 0

    @cached_property
    def intersecting(self) -> bool:
        if self._conflict_free is not None and self._conflict_free >= 1:
            return True
        return is_intersecting(self.hypergraph)

    def t_intersecting(self, t: int) -> bool:
        if self._conflict_free is not None and self._conflict_free >= t:
            return True
        return is_t_intersecting(self.hypergraph, t)

    @cached_property
    def min_intersection(self) -> int | None:
        return min_pairwise_intersection(self.hypergraph) if self.m >= 2 else None

    @cached_property
    def hm(self):
        return is_hm_subfamily(self.hypergraph)

    @cached_property
    def full_star(self) -> bool:
        return self.m == binom(self.n - 1, self.r - 1) and self.m > 0 and self.common != 0

    @cached_property
    def triangle_core(self) -> int | None:
        """For r = 3: a 3-set T meeting every edge in >= 2 points, if any."""
        if self.r != 3 or self.m == 0:
            return None
        edges = self.hypergraph.edges
        first = edges[0]
        cands = set()
        pts = [1 << k for k in range(self.n) if first >> k & 1]
        for a in range(3):
            for b in range(a + 1, 3):
                pair = pts[a] | pts[b]
                for k in range(self.n):
                    if not pair >> k & 1:
                        cands.add(pair | (1 << k))
        for T in sorted(cands):
            if all(popcount(e & T) >= 2 for e in edges):
                return T
        return None

"""Shared brute-force oracles and random instance helpers.

The oracles here deliberately avoid the package's kernels: they work on
Python tuples via itertools so a bug in the bitmask code cannot hide in
both sides of a comparison.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np
import pytest

from orelab.hypergraph import Hypergraph, vset


def brute_sigma(n, r, edge_tuples):
    """(value, witness tuple) of the Ore-degree, or (None, None) when complete."""
    edges = {tuple(sorted(e)) for e in edge_tuples}
    deg = [0] * (n + 1)
    for e in edges:
        for v in e:
            deg[v] += 1
    best = None
    for S in combinations(range(1, n + 1), r):
        if S in edges:
            continue
        d = sum(deg[v] for v in S)
        if best is None or d < best[0]:
            best = (d, S)
    return best if best is not None else (None, None)


def brute_nu(edge_tuples):
    """Largest number of pairwise disjoint edges.

    Include/exclude recursion over the edge list, memoized on (position,
    used vertices); exact, and cheap for small n.
    """
    edges = [frozenset(e) for e in edge_tuples]

    @lru_cache(maxsize=None)
    def best(i, used):
        if i == len(edges):
            return 0
        skip = best(i + 1, used)
        if edges[i] & used:
            return skip
        return max(skip, 1 + best(i + 1, used | edges[i]))

    return best(0, frozenset())


def tuples(H: Hypergraph):
    return [tuple(v for v in range(1, H.n + 1) if e >> (v - 1) & 1) for e in H.edges]


def random_hypergraph(rng: np.random.Generator, n: int, r: int, p: float | None = None,
                      max_edges: int | None = None) -> Hypergraph:
    all_sets = list(combinations(range(1, n + 1), r))
    if p is None:
        p = rng.uniform(0.05, 0.95)
    chosen = [S for S in all_sets if rng.random() < p]
    if max_edges is not None and len(chosen) > max_edges:
        idx = rng.choice(len(chosen), size=max_edges, replace=False)
        chosen = [chosen[k] for k in sorted(idx)]
    return Hypergraph(n, r, (vset(S) for S in chosen))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


# acceptance lines ------------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

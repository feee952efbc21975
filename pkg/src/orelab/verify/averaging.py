"""Degree averaging over a vertex set that spans no edge."""

from __future__ import annotations

from ..hypergraph import Hypergraph, members, ore_degree, popcount
from ..setcore import binom


def averaging_lower_bound(H: Hypergraph, X: int) -> int:
    """Guaranteed lower bound floor(|X| sigma / r) on the degree sum over X.

    Every r-subset S of X is a non-edge, so deg(S) >= sigma.  Summing over
    the C(|X|, r) such sets counts each vertex C(|X|-1, r-1) times, giving
    C(|X|-1, r-1) * sum deg >= C(|X|, r) * sigma.  The actual sum is
    checked against the returned bound.
    """
    k = popcount(X)
    if X >> H.n:
        raise ValueError(f"X = {members(X)} is not inside [{H.n}]")
    if k < H.r or H.r < 1:
        raise ValueError(f"|X| = {k} is smaller than r = {H.r}")
    inside = next((e for e in H.edges if e & X == e), None)
    if inside is not None:
        raise ValueError(f"X spans the edge {members(inside)}")
    sigma = ore_degree(H)
    if sigma.unbounded:  # pragma: no cover - a complete H has no edge-free X
        raise ValueError("sigma is unbounded")
    bound = binom(k, H.r) * sigma.value // binom(k - 1, H.r - 1)
    actual = sum(H.degrees[v - 1] for v in members(X))
    if actual < bound:
        raise AssertionError(f"degree sum {actual} below the averaging bound {bound}")
    return bound

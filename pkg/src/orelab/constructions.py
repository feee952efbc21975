"""Named extremal families, each checked against its closed-form size."""

from __future__ import annotations

import enum
from collections.abc import Iterable
from itertools import combinations

from .hypergraph import Hypergraph, members, popcount, vset
from .setcore import binom


class Kind(enum.Enum):
    ONE_STAR = "star"
    HILTON_MILNER = "hm"
    COVER = "cover"
    CLIQUE = "clique"
    PERFECT_MATCHING = "pm"
    FANO = "fano"
    T_STAR = "tstar"


FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


def _as_mask(s: int | Iterable[int]) -> int:
    return s if isinstance(s, int) else vset(s)


def _sets_containing(n: int, r: int, required: int) -> Iterable[int]:
    rest = [v for v in range(1, n + 1) if not required >> (v - 1) & 1]
    k = r - popcount(required)
    for combo in combinations(rest, k):
        yield required | vset(combo)


def _expect(H: Hypergraph, size: int, what: str) -> Hypergraph:
    if len(H) != size:
        raise AssertionError(f"{what}: generated {len(H)} edges, closed form gives {size}")
    return H


def one_star(n: int, r: int, x: int = 1) -> Hypergraph:
    """All r-sets of [n] through the center ``x``."""
    if not (1 <= r <= n and 1 <= x <= n):
        raise ValueError(f"one_star needs 1 <= r <= n and x in [1, n]; got n={n}, r={r}, x={x}")
    H = Hypergraph(n, r, _sets_containing(n, r, 1 << (x - 1)))
    return _expect(H, binom(n - 1, r - 1), "one_star")


def hilton_milner(n: int, r: int, x: int = 1, S: int | Iterable[int] | None = None) -> Hypergraph:
    """Base edge ``S`` plus every r-set through ``x`` that meets ``S``.

    Default placement: x = 1, S = {2, ..., r + 1}.
    """
    S = vset(range(2, r + 2)) if S is None else _as_mask(S)
    if n < 2 * r or r < 1:
        raise ValueError(f"hilton_milner needs n >= 2r, got n={n}, r={r}")
    if popcount(S) != r or S >> n:
        raise ValueError(f"base edge {members(S)} must be an r-subset of [n]")
    if not 1 <= x <= n:
        raise ValueError(f"center {x} outside [1, {n}]")
    if S >> (x - 1) & 1:
        raise ValueError(f"center {x} lies in the base edge")
    edges = [e for e in _sets_containing(n, r, 1 << (x - 1)) if e & S]
    edges.append(S)
    H = Hypergraph(n, r, edges)
    return _expect(H, binom(n - 1, r - 1) - binom(n - r - 1, r - 1) + 1, "hilton_milner")


def cover_family(n: int, r: int, T: int | Iterable[int]) -> Hypergraph:
    """All r-sets of [n] meeting ``T``."""
    T = _as_mask(T)
    if not T or T >> n or not 1 <= r <= n:
        raise ValueError("cover_family needs a nonempty T inside [n] and 1 <= r <= n")
    tsize = popcount(T)
    H = Hypergraph(n, r, (vset(c) for c in combinations(range(1, n + 1), r) if vset(c) & T))
    return _expect(H, binom(n, r) - binom(n - tsize, r), "cover_family")


def clique_family(n: int, r: int, W: int | Iterable[int]) -> Hypergraph:
    """All r-subsets of the support ``W``."""
    W = _as_mask(W)
    if W >> n or popcount(W) < r or r < 1:
        raise ValueError("clique_family needs W inside [n] with |W| >= r")
    H = Hypergraph(n, r, (vset(c) for c in combinations(members(W), r)))
    return _expect(H, binom(popcount(W), r), "clique_family")


def t_star(n: int, r: int, t_set: int | Iterable[int]) -> Hypergraph:
    """All r-sets containing the fixed set ``t_set``."""
    t_set = _as_mask(t_set)
    t = popcount(t_set)
    if not (1 <= t <= r <= n) or t_set >> n:
        raise ValueError("t_star needs 1 <= |t_set| <= r <= n with t_set inside [n]")
    H = Hypergraph(n, r, _sets_containing(n, r, t_set))
    return _expect(H, binom(n - t, r - t), "t_star")


def perfect_matching(n: int, r: int, count: int | None = None) -> Hypergraph:
    """Disjoint edges {1..r}, {r+1..2r}, ...; ``count`` defaults to n // r."""
    if r < 1:
        raise ValueError("perfect_matching needs r >= 1")
    count = n // r if count is None else count
    if count * r > n:
        raise ValueError(f"{count} disjoint {r}-sets do not fit in [{n}]")
    return Hypergraph(n, r, (vset(range(k * r + 1, k * r + r + 1)) for k in range(count)))


def fano() -> Hypergraph:
    """The Fano plane as a 3-graph on [7]."""
    H = Hypergraph(7, 3, (vset(line) for line in FANO_LINES))
    return _expect(H, 7, "fano")


def triangle_family(n: int, T: int | Iterable[int] | None = None) -> Hypergraph:
    """3-sets of [n] meeting a fixed 3-set ``T`` in at least two points."""
    T = vset((1, 2, 3)) if T is None else _as_mask(T)
    if popcount(T) != 3 or T >> n:
        raise ValueError("triangle_family needs a 3-subset of [n]")
    H = Hypergraph(n, 3, (vset(c) for c in combinations(range(1, n + 1), 3)
                         if popcount(vset(c) & T) >= 2))
    return _expect(H, 3 * (n - 3) + 1, "triangle_family")


def generate(kind: Kind | str, n: int | None = None, r: int | None = None, *,
             x: int = 1, S=None, T=None, W=None, t=None) -> Hypergraph:
    """Dispatch by kind with lexicographically-first default placements."""
    kind = Kind(kind)
    if kind is Kind.FANO:
        return fano()
    if n is None or r is None:
        raise ValueError(f"{kind.value} needs n and r")
    if kind is Kind.ONE_STAR:
        return one_star(n, r, x)
    if kind is Kind.HILTON_MILNER:
        if S is None:
            S = [v for v in range(1, n + 1) if v != x][:r]
        return hilton_milner(n, r, x, S)
    if kind is Kind.COVER:
        return cover_family(n, r, T if T is not None else [1])
    if kind is Kind.CLIQUE:
        return clique_family(n, r, W if W is not None else range(1, n + 1))
    if kind is Kind.T_STAR:
        if T is None:
            T = range(1, (t or 1) + 1)
        return t_star(n, r, T)
    if kind is Kind.PERFECT_MATCHING:
        return perfect_matching(n, r)
    raise ValueError(kind)  # pragma: no cover

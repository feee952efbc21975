"""Exact matching solvers: maximum, rooted, rainbow, and monochromatic checks."""

from __future__ import annotations

from collections.abc import Sequence
from typing import NamedTuple

from . import kernels
from .hypergraph import ColoredHypergraph, Hypergraph, find_coloring_conflict, members


class Matching(NamedTuple):
    edges: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edges)


class RainbowPick(NamedTuple):
    family: int
    edge: int
    color: int


class ArrowVerdict(NamedTuple):
    holds: bool
    color: int | None
    matching: Matching | None


def _search(H: Hypergraph, target: int) -> Matching:
    if H.r == 0:
        return Matching(H.edges[:1])
    lo, hi = H.words
    size, idx = kernels.matching_search(lo, hi, H.member_array, H.n, H.r, target)
    return Matching(tuple(sorted(H.edges[int(k)] for k in idx)))


def max_matching(H: Hypergraph) -> Matching:
    """A maximum matching; its size is the matching number.

    Branch and bound on the lowest-index coverable vertex: either one of
    its compatible edges joins the matching or the vertex is discarded.
    Nodes are pruned when the count plus min(coverable // r, size of a
    greedy vertex cover of the compatible edges) cannot beat the incumbent.
    """
    cap = H.n // H.r if H.r else 1
    return _search(H, cap)


def matching_number(H: Hypergraph) -> int:
    return max_matching(H).size


def has_matching(H: Hypergraph, s: int) -> Matching | None:
    """A matching of exactly ``s`` edges, or None when none exists."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    if s == 0:
        return Matching(())
    if H.r and s * H.r > H.n:
        return None
    found = _search(H, s)
    if found.size < s:
        return None
    return Matching(found.edges[:s])


def rooted_matching(H: Hypergraph, roots: Sequence[int]) -> Matching | None:
    """Disjoint edges e_1..e_s with roots[i] in e_i, or None.

    Backtracks over roots, always extending the root with the fewest
    compatible edges (ties to the earlier root).  The result lists edges in
    the order of ``roots``.
    """
    roots = list(roots)
    if not roots:
        raise ValueError("rooted_matching needs at least one root")
    if len(set(roots)) != len(roots):
        raise ValueError(f"duplicate roots in {roots}")
    for v in roots:
        if not 1 <= v <= H.n:
            raise ValueError(f"root {v} outside [1, {H.n}]")
    root_mask = 0
    for v in roots:
        root_mask |= 1 << (v - 1)
    cands = []
    for v in roots:
        bit = 1 << (v - 1)
        others = root_mask ^ bit
        cands.append([e for e in H.edges if e & bit and not e & others])
    chosen: list[int | None] = [None] * len(roots)

    def extend(used: int) -> bool:
        pick, pick_opts = -1, None
        for i, opts in enumerate(cands):
            if chosen[i] is not None:
                continue
            live = [e for e in opts if not e & used]
            if pick_opts is None or len(live) < len(pick_opts):
                pick, pick_opts = i, live
                if not live:
                    return False
        if pick < 0:
            return True
        for e in pick_opts:
            chosen[pick] = e
            if extend(used | e):
                return True
        chosen[pick] = None
        return False

    if extend(0):
        return Matching(tuple(chosen))
    return None


def rainbow_matching(families: Sequence[ColoredHypergraph]) -> list[RainbowPick] | None:
    """Pairwise disjoint e_i in family i with pairwise distinct colors, or None.

    Families are processed in the given order, edges in canonical order.
    """
    if not families:
        return []
    n = families[0].n
    for k, C in enumerate(families):
        if C.n != n:
            raise ValueError(f"family {k} lives on n={C.n}, expected n={n}")
        bad = find_coloring_conflict(C.base, C.colors)
        if bad is not None:
            raise ValueError(f"family {k} is not properly colored: "
                             f"{members(bad[0])} / {members(bad[1])}")
    picks: list[RainbowPick] = []
    used_colors: set[int] = set()

    def extend(i: int, used: int) -> bool:
        if i == len(families):
            return True
        C = families[i]
        for e, c in zip(C.base.edges, C.colors):
            if e & used or c in used_colors:
                continue
            picks.append(RainbowPick(i, e, c))
            used_colors.add(c)
            if extend(i + 1, used | e):
                return True
            picks.pop()
            used_colors.discard(c)
        return False

    return list(picks) if extend(0, 0) else None


def arrow_check(H: Hypergraph, coloring: Sequence[int], sizes: Sequence[int]) -> ArrowVerdict:
    """Whether some color class i (1-based) holds a matching of size sizes[i-1].

    ``coloring`` assigns each edge, in canonical order, a color in 1..c
    where c = len(sizes).  When the verdict is false the supplied coloring
    is itself the certificate.
    """
    c = len(sizes)
    if c == 0:
        raise ValueError("sizes must be nonempty")
    if any(a < b for a, b in zip(sizes, sizes[1:])) or min(sizes) < 1:
        raise ValueError(f"sizes must be positive and nonincreasing, got {list(sizes)}")
    if len(coloring) != len(H.edges):
        raise ValueError(f"{len(coloring)} colors for {len(H.edges)} edges")
    classes: list[list[int]] = [[] for _ in range(c)]
    for e, col in zip(H.edges, coloring):
        if not 1 <= col <= c:
            raise ValueError(f"color {col} outside [1, {c}]")
        classes[col - 1].append(e)
    for k in range(c):
        sub = Hypergraph(H.n, H.r, classes[k])
        found = has_matching(sub, sizes[k])
        if found is not None:
            return ArrowVerdict(True, k + 1, found)
    return ArrowVerdict(False, None, None)

"""r-uniform hypergraphs on [n] with exact degree and Ore-degree computations.

Vertices are 1-based externally; a vertex set is an int bitmask with bit
``v - 1`` standing for vertex ``v``.  Edges are kept sorted by bitmask value
(equivalently colex order), which is the canonical order used for every
witness tie-break in this package.
"""

from __future__ import annotations

import functools
from collections.abc import Iterable, Iterator, Sequence
from functools import cached_property
from math import comb

import numpy as np

from . import kernels
from .setcore import N_MAX, subset_unrank

MASK64 = (1 << 64) - 1


def vset(vertices: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based vertices."""
    mask = 0
    for v in vertices:
        if v < 1:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << (v - 1)
    return mask


def members(mask: int) -> tuple[int, ...]:
    """Sorted 1-based vertices of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest_vertex(mask: int) -> int:
    return (mask & -mask).bit_length()


class Hypergraph:
    """Immutable r-uniform hypergraph on [n] with canonical edge order."""

    def __init__(self, n: int, r: int, edges: Iterable[int] = ()):
        if n < 0 or n > N_MAX:
            raise ValueError(f"n={n} outside 0..{N_MAX}")
        if r < 0 or r > n:
            raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
        canon = sorted(set(edges))
        limit = 1 << n
        for e in canon:
            if e < 0 or e >= limit:
                raise ValueError(f"edge {members(e)} has a vertex outside [1, {n}]")
            if popcount(e) != r:
                raise ValueError(f"edge {members(e)} does not have size {r}")
        self.n = n
        self.r = r
        self.edges: tuple[int, ...] = tuple(canon)
        deg = [0] * n
        for e in canon:
            while e:
                low = e & -e
                deg[low.bit_length() - 1] += 1
                e ^= low
        self.degrees: tuple[int, ...] = tuple(deg)

    @classmethod
    def from_ranks(cls, n: int, r: int, ranks: Iterable[int]) -> Hypergraph:
        """Build from colex ranks of r-subsets (see ``setcore.subset_rank``)."""
        ranks = np.unique(np.asarray(list(ranks) if not isinstance(ranks, np.ndarray) else ranks,
                                     dtype=np.int64))
        if n <= 64:
            lo, _ = kernels.subset_words(n, r)
            masks = [int(x) for x in lo[ranks]]
        else:
            masks = [subset_unrank(int(k), r) for k in ranks]
        H = cls(n, r, masks)
        H.__dict__["ranks"] = ranks
        return H

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[int]:
        return iter(self.edges)

    def __contains__(self, mask: object) -> bool:
        return mask in self.edge_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.r, self.edges) == (other.n, other.r, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, m={len(self.edges)})"

    @cached_property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    @cached_property
    def deg_array(self) -> np.ndarray:
        return np.asarray(self.degrees, dtype=np.int64)

    @cached_property
    def member_array(self) -> np.ndarray:
        """(m, r) int64 array of 0-based members, rows in canonical order."""
        mem = np.empty((len(self.edges), self.r), dtype=np.int64)
        for k, e in enumerate(self.edges):
            mem[k] = [v - 1 for v in members(e)]
        return mem

    @cached_property
    def words(self) -> tuple[np.ndarray, np.ndarray]:
        lo = np.fromiter((e & MASK64 for e in self.edges), dtype=np.uint64, count=len(self.edges))
        hi = np.fromiter((e >> 64 for e in self.edges), dtype=np.uint64, count=len(self.edges))
        return lo, hi

    @cached_property
    def ranks(self) -> np.ndarray:
        mem = self.member_array
        total = np.zeros(len(self.edges), dtype=np.int64)
        for j in range(self.r):
            col = np.array([comb(v, j + 1) for v in range(self.n)], dtype=np.int64)
            total += col[mem[:, j]]
        return total

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    def is_complete(self) -> bool:
        return len(self.edges) == comb(self.n, self.r)

    def edge_lists(self) -> list[tuple[int, ...]]:
        return [members(e) for e in self.edges]


def build(n: int, r: int, edge_list: Iterable[Sequence[int]]) -> Hypergraph:
    """Hypergraph from 1-based vertex lists; duplicate edges collapse."""
    if n > N_MAX:
        raise ValueError(f"n={n} exceeds n_max={N_MAX}")
    masks = []
    for edge in edge_list:
        edge = list(edge)
        if len(set(edge)) != len(edge):
            raise ValueError(f"edge {edge} repeats a vertex")
        if len(edge) != r:
            raise ValueError(f"edge {edge} does not have size {r}")
        for v in edge:
            if not 1 <= v <= n:
                raise ValueError(f"vertex {v} in edge {edge} outside [1, {n}]")
        masks.append(vset(edge))
    return Hypergraph(n, r, masks)


@functools.total_ordering
class OreDegree:
    """Finite Ore-degree value or ``UNBOUNDED`` (no non-edge r-set exists).

    Compares against ints and other OreDegree values; Unbounded is greater
    than every finite value.  ``witness`` (a minimizing non-edge) does not
    take part in comparisons.
    """

    __slots__ = ("value", "witness")

    def __init__(self, value: int | None, witness: int | None = None):
        self.value = value
        self.witness = witness

    @property
    def unbounded(self) -> bool:
        return self.value is None

    def _key(self, other):
        if isinstance(other, OreDegree):
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        v = self._key(other)
        if v is NotImplemented:
            return NotImplemented
        return self.value == v

    def __lt__(self, other: object) -> bool:
        v = self._key(other)
        if v is NotImplemented:
            return NotImplemented
        if self.value is None:
            return False
        return v is None or self.value < v

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return "OreDegree(unbounded)" if self.value is None else f"OreDegree({self.value})"

    def __str__(self) -> str:
        return "unbounded" if self.value is None else str(self.value)


UNBOUNDED = OreDegree(None)


def set_degree(H: Hypergraph, S: int) -> int:
    """Sum of vertex degrees over the vertices of ``S``."""
    if S >> H.n:
        raise ValueError("vertex set reaches outside [n]")
    return sum(H.degrees[v - 1] for v in members(S))


def ore_degree(H: Hypergraph) -> OreDegree:
    """Minimum of deg(S) over non-edge r-sets S, with the first minimizer.

    The r-subsets are scanned in canonical order, so the witness is the
    minimizing non-edge with the smallest bitmask.
    """
    if H.is_complete():
        return UNBOUNDED
    value, rank = kernels.ore_scan(H.n, H.r, H.ranks, H.deg_array)
    return OreDegree(int(value), subset_unrank(int(rank), H.r))


def link(H: Hypergraph, x: int) -> Hypergraph:
    """Edges through ``x`` with ``x`` deleted, as an (r-1)-graph on [n]."""
    if H.r == 0:
        raise ValueError("link is undefined for r = 0")
    if not 1 <= x <= H.n:
        raise ValueError(f"vertex {x} outside [1, {H.n}]")
    bit = 1 << (x - 1)
    return Hypergraph(H.n, H.r - 1, (e ^ bit for e in H.edges if e & bit))


def _first_pair(lo: np.ndarray, hi: np.ndarray, threshold: int,
                lo2: np.ndarray | None = None, hi2: np.ndarray | None = None):
    """First (i, j) in row-major order with |E_i & F_j| < threshold.

    With a single family the pairs are i < j.
    """
    same = lo2 is None
    if same:
        lo2, hi2 = lo, hi
    for i in range(lo.shape[0]):
        start = i + 1 if same else 0
        a = lo[i] & lo2[start:]
        b = hi[i] & hi2[start:]
        if threshold == 1:
            bad = (a | b) == 0
        else:
            bad = (np.bitwise_count(a).astype(np.int64) + np.bitwise_count(b)) < threshold
        if bad.any():
            return i, start + int(np.argmax(bad))
    return None


def find_disjoint_pair(H: Hypergraph) -> tuple[int, int] | None:
    """First disjoint pair of edges in canonical order, or None."""
    pair = _first_pair(*H.words, 1)
    if pair is None:
        return None
    return H.edges[pair[0]], H.edges[pair[1]]


def is_intersecting(H: Hypergraph) -> bool:
    return find_disjoint_pair(H) is None


def min_pairwise_intersection(H: Hypergraph) -> int:
    """Minimum |E & F| over distinct edges E, F."""
    m = len(H.edges)
    if m < 2:
        raise ValueError("min_pairwise_intersection needs at least two edges")
    lo, hi = H.words
    best = H.r
    for i in range(m - 1):
        sizes = np.bitwise_count(lo[i] & lo[i + 1:]).astype(np.int64) + np.bitwise_count(
            hi[i] & hi[i + 1:])
        best = min(best, int(sizes.min()))
        if best == 0:
            break
    return best


def is_t_intersecting(H: Hypergraph, t: int) -> bool:
    if len(H.edges) < 2:
        return True
    return _first_pair(*H.words, t) is None


def find_cross_disjoint_pair(A: Hypergraph, B: Hypergraph) -> tuple[int, int] | None:
    """First (A-edge, B-edge) pair that is disjoint, or None."""
    if A.n != B.n:
        raise ValueError(f"vertex universes differ: n={A.n} vs n={B.n}")
    if not A.edges or not B.edges:
        return None
    pair = _first_pair(*A.words, 1, *B.words)
    if pair is None:
        return None
    return A.edges[pair[0]], B.edges[pair[1]]


def is_cross_intersecting(A: Hypergraph, B: Hypergraph) -> bool:
    return find_cross_disjoint_pair(A, B) is None


def common_vertices(H: Hypergraph) -> int:
    """Bitmask of vertices lying in every edge (all of [n] for no edges)."""
    acc = (1 << H.n) - 1
    for e in H.edges:
        acc &= e
        if not acc:
            break
    return acc


def is_trivial_star(H: Hypergraph) -> int | None:
    """Smallest vertex contained in every edge, or None."""
    if not H.edges:
        raise ValueError("is_trivial_star is ill-posed on the empty hypergraph")
    acc = common_vertices(H)
    return lowest_vertex(acc) if acc else None


def is_trivial(H: Hypergraph) -> bool:
    """Sub-hypergraph of some 1-star; the empty family counts as trivial."""
    return not H.edges or common_vertices(H) != 0


def is_hm_subfamily(H: Hypergraph) -> tuple[int, int] | None:
    """First (x, S) with S an edge, x not in S, every other edge containing x
    and meeting S.  Edges S are tried in canonical order, then x ascending."""
    edges = H.edges
    m = len(edges)
    full = (1 << H.n) - 1
    prefix = [full] * (m + 1)
    for k, e in enumerate(edges):
        prefix[k + 1] = prefix[k] & e
    suffix = [full] * (m + 1)
    for k in range(m - 1, -1, -1):
        suffix[k] = suffix[k + 1] & edges[k]
    for k, S in enumerate(edges):
        cand = prefix[k] & suffix[k + 1] & ~S & full
        if not cand:
            continue
        if all(e & S for j, e in enumerate(edges) if j != k):
            return lowest_vertex(cand), S
    return None


def is_regular(H: Hypergraph) -> int | None:
    """The common vertex degree, or None when degrees differ."""
    if not H.degrees:
        return 0
    d = H.degrees[0]
    return d if all(x == d for x in H.degrees) else None


def find_coloring_conflict(H: Hypergraph, colors: Sequence[int]) -> tuple[int, int] | None:
    """First pair of intersecting edges with equal colors, as edge masks."""
    if len(colors) != len(H.edges):
        raise ValueError(f"{len(colors)} colors for {len(H.edges)} edges")
    seen: list[dict[int, int]] = [dict() for _ in range(H.n)]
    for k, e in enumerate(H.edges):
        c = colors[k]
        for v in members(e):
            prev = seen[v - 1].get(c)
            if prev is not None:
                return H.edges[prev], e
        for v in members(e):
            seen[v - 1][c] = k
    return None


class ColoredHypergraph:
    """Hypergraph with one color id per edge, aligned with canonical order."""

    def __init__(self, base: Hypergraph, colors: Sequence[int], *, validate: bool = True,
                 palette: int | None = None):
        if len(colors) != len(base.edges):
            raise ValueError(f"{len(colors)} colors for {len(base.edges)} edges")
        self.base = base
        self.colors: tuple[int, ...] = tuple(int(c) for c in colors)
        # number of available colors; defaults to the largest one used
        self.palette = palette if palette is not None else max(self.colors, default=1)
        if validate:
            bad = find_coloring_conflict(base, self.colors)
            if bad is not None:
                raise ValueError(
                    f"improper coloring: edges {members(bad[0])} and {members(bad[1])} "
                    "share a vertex and a color")

    @classmethod
    def build(cls, n: int, r: int, colored_edges: Iterable[tuple[Sequence[int], int]],
              *, validate: bool = True) -> ColoredHypergraph:
        by_mask: dict[int, int] = {}
        for verts, color in colored_edges:
            mask = build(n, r, [verts]).edges[0]
            if mask in by_mask and by_mask[mask] != color:
                raise ValueError(f"edge {members(mask)} listed with two colors")
            by_mask[mask] = color
        base = Hypergraph(n, r, by_mask)
        return cls(base, [by_mask[e] for e in base.edges], validate=validate)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def r(self) -> int:
        return self.base.r

    def __len__(self) -> int:
        return len(self.base.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredHypergraph):
            return NotImplemented
        return self.base == other.base and self.colors == other.colors

    def __hash__(self) -> int:
        return hash((self.base, self.colors))

    def __repr__(self) -> str:
        return f"ColoredHypergraph(n={self.n}, r={self.r}, m={len(self)}, colors={len(set(self.colors))})"


def validate_proper_coloring(C: ColoredHypergraph) -> bool:
    return find_coloring_conflict(C.base, C.colors) is None

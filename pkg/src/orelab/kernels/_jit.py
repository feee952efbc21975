"""numba-compiled kernels.

Every function here mirrors one in ``_numpy`` and must return identical
results, including witness tie-breaks.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def ore_scan(n, r, edge_ranks, deg):
    """Min degree-sum over r-subsets of [n] absent from ``edge_ranks``.

    Subsets are visited in colex order (= increasing bitmask) with a merged
    scan against the sorted edge ranks.  Returns (min, rank) or (0, -1).
    """
    best = np.int64(0)
    best_rank = np.int64(-1)
    if r == 0:
        if edge_ranks.shape[0] == 0:
            return best, np.int64(0)
        return best, best_rank
    c = np.empty(r + 1, dtype=np.int64)
    for j in range(r):
        c[j] = j
    c[r] = n
    m = edge_ranks.shape[0]
    ptr = 0
    rank = np.int64(0)
    while True:
        if ptr < m and edge_ranks[ptr] == rank:
            ptr += 1
        else:
            total = np.int64(0)
            for j in range(r):
                total += deg[c[j]]
            if best_rank < 0 or total < best:
                best = total
                best_rank = rank
        rank += 1
        j = 0
        while j < r and c[j] + 1 == c[j + 1]:
            j += 1
        if j >= r or c[j] + 1 >= n:
            break
        c[j] += 1
        for k in range(j):
            c[k] = k
    return best, best_rank


@njit(cache=True)
def ore_dense(table, is_edge, deg):
    best = np.int64(0)
    best_idx = np.int64(-1)
    rows, r = table.shape
    for idx in range(rows):
        if is_edge[idx]:
            continue
        total = np.int64(0)
        for j in range(r):
            total += deg[table[idx, j]]
        if best_idx < 0 or total < best:
            best = total
            best_idx = idx
    return best, best_idx


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit(cache=True)
def _lowest_bit(lo, hi):
    if lo != 0:
        v = 0
        while (lo >> np.uint64(v)) & np.uint64(1) == 0:
            v += 1
        return v
    if hi != 0:
        v = 0
        while (hi >> np.uint64(v)) & np.uint64(1) == 0:
            v += 1
        return 64 + v
    return -1


@njit(cache=True)
def _node_bound(lo, hi, mem, n, r, ulo, uhi, count, alive, cnt, inc_ptr, inc_idx):
    """Upper bound on the best completion, and lowest coverable vertex."""
    m = lo.shape[0]
    clo = np.uint64(0)
    chi = np.uint64(0)
    any_edge = False
    for v in range(n):
        cnt[v] = 0
    for e in range(m):
        if (lo[e] & ulo) | (hi[e] & uhi) == 0:
            alive[e] = True
            any_edge = True
            clo |= lo[e]
            chi |= hi[e]
            for j in range(r):
                cnt[mem[e, j]] += 1
        else:
            alive[e] = False
    if not any_edge:
        return count, -1
    by_vertices = count + (_popcount(clo) + _popcount(chi)) // r
    # greedy vertex cover of the compatible edges bounds the matching size
    picks = 0
    while True:
        bv = -1
        bc = 0
        for v in range(n):
            if cnt[v] > bc:
                bc = cnt[v]
                bv = v
        if bv < 0:
            break
        picks += 1
        for k in range(inc_ptr[bv], inc_ptr[bv + 1]):
            e = inc_idx[k]
            if alive[e]:
                alive[e] = False
                for j in range(r):
                    cnt[mem[e, j]] -= 1
    by_cover = count + picks
    bound = by_vertices if by_vertices < by_cover else by_cover
    return bound, _lowest_bit(clo, chi)


@njit(cache=True)
def matching_search(lo, hi, mem, n, r, target, inc_ptr, inc_idx):
    """Branch and bound for a maximum matching; stops early at ``target``.

    Returns (size, chosen edge indices padded with -1).
    """
    m = lo.shape[0]
    best_edges = np.full(n + 1, -1, dtype=np.int64)
    best = 0
    # first-fit greedy lower bound
    glo = np.uint64(0)
    ghi = np.uint64(0)
    for e in range(m):
        if (lo[e] & glo) | (hi[e] & ghi) == 0:
            best_edges[best] = e
            best += 1
            glo |= lo[e]
            ghi |= hi[e]
    if best >= target or m == 0:
        return best, best_edges

    alive = np.zeros(m, dtype=np.bool_)
    cnt = np.zeros(n, dtype=np.int64)
    depth_cap = n + 2
    s_lo = np.zeros(depth_cap, dtype=np.uint64)
    s_hi = np.zeros(depth_cap, dtype=np.uint64)
    s_cnt = np.zeros(depth_cap, dtype=np.int64)
    s_v = np.zeros(depth_cap, dtype=np.int64)
    s_ptr = np.zeros(depth_cap, dtype=np.int64)
    s_phase = np.zeros(depth_cap, dtype=np.int64)
    path = np.full(depth_cap, -1, dtype=np.int64)

    bound, v = _node_bound(lo, hi, mem, n, r, np.uint64(0), np.uint64(0), 0,
                           alive, cnt, inc_ptr, inc_idx)
    if v < 0 or bound <= best:
        return best, best_edges
    depth = 0
    s_lo[0] = 0
    s_hi[0] = 0
    s_cnt[0] = 0
    s_v[0] = v
    s_ptr[0] = inc_ptr[v]
    s_phase[0] = 0
    while depth >= 0 and best < target:
        ulo = s_lo[depth]
        uhi = s_hi[depth]
        v = s_v[depth]
        if s_phase[depth] == 0:
            child = -1
            while s_ptr[depth] < inc_ptr[v + 1]:
                e = inc_idx[s_ptr[depth]]
                s_ptr[depth] += 1
                if (lo[e] & ulo) | (hi[e] & uhi) == 0:
                    child = e
                    break
            if child >= 0:
                path[depth] = child
                nlo = ulo | lo[child]
                nhi = uhi | hi[child]
                ncnt = s_cnt[depth] + 1
            else:
                s_phase[depth] = 1
                path[depth] = -1
                if v < 64:
                    nlo = ulo | (np.uint64(1) << np.uint64(v))
                    nhi = uhi
                else:
                    nlo = ulo
                    nhi = uhi | (np.uint64(1) << np.uint64(v - 64))
                ncnt = s_cnt[depth]
        else:
            depth -= 1
            continue
        bound, nv = _node_bound(lo, hi, mem, n, r, nlo, nhi, ncnt,
                                alive, cnt, inc_ptr, inc_idx)
        if nv < 0:
            if ncnt > best:
                best = ncnt
                k = 0
                for d in range(depth + 1):
                    if path[d] >= 0:
                        best_edges[k] = path[d]
                        k += 1
                for d in range(k, n + 1):
                    best_edges[d] = -1
            continue
        if bound <= best:
            continue
        depth += 1
        s_lo[depth] = nlo
        s_hi[depth] = nhi
        s_cnt[depth] = ncnt
        s_v[depth] = nv
        s_ptr[depth] = inc_ptr[nv]
        s_phase[depth] = 0
    return best, best_edges


@njit(cache=True)
def graph_scan(n, start, stop):
    """Graph matching-threshold statistics over all graphs with edge-bitmask in [start, stop).

    Pair k indexes the k-th pair (u < v) in lexicographic order.  For each
    s in 1..n//2 returns hypothesis counts, violation counts and the first
    violating mask (-1 if none).
    """
    npairs = n * (n - 1) // 2
    pu = np.empty(npairs, dtype=np.int64)
    pv = np.empty(npairs, dtype=np.int64)
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            pu[k] = u
            pv[k] = v
            k += 1
    smax = n // 2
    hyp = np.zeros(smax + 1, dtype=np.int64)
    viol = np.zeros(smax + 1, dtype=np.int64)
    first = np.full(smax + 1, -1, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    adj = np.zeros(n, dtype=np.int64)
    full = (1 << n) - 1
    best = np.zeros(1 << n, dtype=np.int64)
    for g in range(start, stop):
        for v in range(n):
            deg[v] = 0
            adj[v] = 0
        for k in range(npairs):
            if (g >> k) & 1:
                deg[pu[k]] += 1
                deg[pv[k]] += 1
                adj[pu[k]] |= 1 << pv[k]
                adj[pv[k]] |= 1 << pu[k]
        sigma = -1
        for k in range(npairs):
            if not (g >> k) & 1:
                t = deg[pu[k]] + deg[pv[k]]
                if sigma < 0 or t < sigma:
                    sigma = t
        best[0] = 0
        for S in range(1, full + 1):
            low = S & -S
            v = 0
            while (low >> v) != 1:
                v += 1
            rest = S ^ low
            b = best[rest]
            cand = adj[v] & rest
            while cand:
                lb = cand & -cand
                t = 1 + best[rest ^ lb]
                if t > b:
                    b = t
                cand ^= lb
            best[S] = b
        nu = best[full]
        for s in range(1, smax + 1):
            if sigma < 0 or sigma > 2 * (s - 1):
                hyp[s] += 1
                if nu < s:
                    viol[s] += 1
                    if first[s] < 0:
                        first[s] = g
    return hyp, viol, first

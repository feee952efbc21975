"""Pure-numpy counterparts of the compiled kernels in ``_jit``."""

from __future__ import annotations

import numpy as np

from .tables import subset_table

_U1 = np.uint64(1)


def ore_scan(n, r, edge_ranks, deg):
    if r == 0:
        return np.int64(0), np.int64(0 if len(edge_ranks) == 0 else -1)
    table = subset_table(n, r)
    is_edge = np.zeros(table.shape[0], dtype=bool)
    is_edge[edge_ranks] = True
    return ore_dense(table, is_edge, deg)


def ore_dense(table, is_edge, deg):
    sums = deg[table].sum(axis=1)
    free = ~is_edge
    if not free.any():
        return np.int64(0), np.int64(-1)
    idx = np.flatnonzero(free)
    k = int(np.argmin(sums[idx]))
    return np.int64(sums[idx[k]]), np.int64(idx[k])


def _popcount(words: np.ndarray) -> int:
    return int(sum(bin(int(w)).count("1") for w in words))


def _node_bound(lo, hi, mem, n, r, ulo, uhi, count, inc_ptr, inc_idx):
    alive = ((lo & ulo) | (hi & uhi)) == 0
    if not alive.any():
        return count, -1
    clo = np.bitwise_or.reduce(lo[alive])
    chi = np.bitwise_or.reduce(hi[alive])
    by_vertices = count + (bin(int(clo)).count("1") + bin(int(chi)).count("1")) // r
    cnt = np.bincount(mem[alive].ravel(), minlength=n)
    picks = 0
    while True:
        bv = int(np.argmax(cnt))
        if cnt[bv] <= 0:
            break
        picks += 1
        hit = inc_idx[inc_ptr[bv]:inc_ptr[bv + 1]]
        hit = hit[alive[hit]]
        alive[hit] = False
        np.subtract.at(cnt, mem[hit].ravel(), 1)
    bound = min(by_vertices, count + picks)
    if clo:
        low = (int(clo) & -int(clo)).bit_length() - 1
    else:
        low = 64 + (int(chi) & -int(chi)).bit_length() - 1
    return bound, low


def matching_search(lo, hi, mem, n, r, target, inc_ptr, inc_idx):
    m = lo.shape[0]
    best_edges = np.full(n + 1, -1, dtype=np.int64)
    best = 0
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

    state = {"best": best, "edges": best_edges}
    path: list[int] = []

    def visit(ulo, uhi, count):
        bound, v = _node_bound(lo, hi, mem, n, r, ulo, uhi, count, inc_ptr, inc_idx)
        if v < 0:
            if count > state["best"]:
                state["best"] = count
                chosen = np.full(n + 1, -1, dtype=np.int64)
                chosen[: len(path)] = path
                state["edges"] = chosen
            return
        if bound <= state["best"]:
            return
        for e in inc_idx[inc_ptr[v]:inc_ptr[v + 1]]:
            if state["best"] >= target:
                return
            if (lo[e] & ulo) | (hi[e] & uhi) == 0:
                path.append(int(e))
                visit(ulo | lo[e], uhi | hi[e], count + 1)
                path.pop()
        if state["best"] >= target:
            return
        if v < 64:
            visit(ulo | (_U1 << np.uint64(v)), uhi, count)
        else:
            visit(ulo, uhi | (_U1 << np.uint64(v - 64)), count)

    visit(np.uint64(0), np.uint64(0), 0)
    return state["best"], state["edges"]


def graph_scan(n, start, stop, chunk=1 << 16):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    smax = n // 2
    hyp = np.zeros(smax + 1, dtype=np.int64)
    viol = np.zeros(smax + 1, dtype=np.int64)
    first = np.full(smax + 1, -1, dtype=np.int64)
    full = (1 << n) - 1
    for lo_g in range(start, stop, chunk):
        g = np.arange(lo_g, min(stop, lo_g + chunk), dtype=np.int64)
        bits = [((g >> k) & 1).astype(bool) for k in range(len(pairs))]
        deg = np.zeros((g.size, n), dtype=np.int64)
        adj = np.zeros((g.size, n), dtype=np.int64)
        for k, (u, v) in enumerate(pairs):
            b = bits[k]
            deg[b, u] += 1
            deg[b, v] += 1
            adj[b, u] |= 1 << v
            adj[b, v] |= 1 << u
        sigma = np.full(g.size, -1, dtype=np.int64)
        for k, (u, v) in enumerate(pairs):
            t = deg[:, u] + deg[:, v]
            upd = ~bits[k] & ((sigma < 0) | (t < sigma))
            sigma[upd] = t[upd]
        best = np.zeros((g.size, full + 1), dtype=np.int64)
        for S in range(1, full + 1):
            low = S & -S
            v = low.bit_length() - 1
            rest = S ^ low
            b = best[:, rest].copy()
            cand = rest
            while cand:
                lb = cand & -cand
                u = lb.bit_length() - 1
                t = np.where((adj[:, v] >> u) & 1 == 1, 1 + best[:, rest ^ lb], 0)
                np.maximum(b, t, out=b)
                cand ^= lb
            best[:, S] = b
        nu = best[:, full]
        for s in range(1, smax + 1):
            h = (sigma < 0) | (sigma > 2 * (s - 1))
            bad = h & (nu < s)
            hyp[s] += int(h.sum())
            cnt = int(bad.sum())
            viol[s] += cnt
            if cnt and first[s] < 0:
                first[s] = int(g[np.argmax(bad)])
    return hyp, viol, first

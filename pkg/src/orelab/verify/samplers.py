"""Seeded random instances inside each registry entry's validity region.

Uniform random families almost never satisfy structural hypotheses such
as "non-trivial intersecting", so samplers mix uniform families with
perturbed extremal templates (stars, Hilton-Milner families, t-stars,
cover families, the Fano plane) under random vertex relabelings.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np

from ..constructions import (
    cover_family,
    fano,
    hilton_milner,
    one_star,
    perfect_matching,
    t_star,
    triangle_family,
)
from ..hypergraph import ColoredHypergraph, Hypergraph, members, popcount, vset
from ..setcore import enumerate_subsets

Sampler = Callable[[np.random.Generator], tuple[object, dict]]


def _pick(rng, seq):
    return seq[int(rng.integers(len(seq)))]


def all_sets(n: int, r: int) -> list[int]:
    return list(enumerate_subsets(n, r))


def random_set(rng, n: int, r: int) -> int:
    return vset((rng.choice(n, size=r, replace=False) + 1).tolist())


def random_family(rng, n: int, r: int, p: float | None = None) -> Hypergraph:
    p = rng.random() if p is None else p
    sets = all_sets(n, r)
    keep = rng.random(len(sets)) < p
    return Hypergraph(n, r, (e for e, k in zip(sets, keep) if k))


def relabel(rng, H: Hypergraph) -> Hypergraph:
    perm = rng.permutation(H.n) + 1
    return Hypergraph(H.n, H.r, (vset(int(perm[v - 1]) for v in members(e)) for e in H.edges))


def subfamily(rng, H: Hypergraph, p: float | None = None) -> Hypergraph:
    p = rng.uniform(0.3, 1.0) if p is None else p
    keep = rng.random(len(H)) < p
    return Hypergraph(H.n, H.r, (e for e, k in zip(H.edges, keep) if k))


def greedy_intersecting(rng, n: int, r: int, t: int = 1, pool=None, tries: int = 400,
                        seed_family: Hypergraph | None = None) -> Hypergraph:
    """Add random candidates that meet every chosen edge in >= t points."""
    chosen = list(seed_family.edges) if seed_family is not None else []
    for _ in range(int(rng.integers(1, tries + 1))):
        e = _pick(rng, pool) if pool is not None else random_set(rng, n, r)
        if e not in chosen and all(popcount(e & f) >= t for f in chosen):
            chosen.append(e)
    return Hypergraph(n, r, chosen)


def intersecting_mix(rng, n: int, r: int) -> Hypergraph:
    """Intersecting family from a random template, thinned and relabeled."""
    kind = int(rng.integers(5))
    if kind == 0:
        H = subfamily(rng, one_star(n, r))
    elif kind == 1 and n >= 2 * r:
        H = subfamily(rng, hilton_milner(n, r))
    elif kind == 2 and r == 3 and n >= 3:
        H = subfamily(rng, triangle_family(n))
    elif kind == 3 and (n, r) == (7, 3):
        H = subfamily(rng, fano())
    else:
        H = greedy_intersecting(rng, n, r)
    if rng.random() < 0.5 and len(H):
        H = greedy_intersecting(rng, n, r, seed_family=H, tries=50)
    return relabel(rng, H)


def proper_coloring(rng, H: Hypergraph, extra: int = 0) -> ColoredHypergraph:
    """Greedy proper coloring in random edge order, palette shuffled."""
    order = rng.permutation(len(H))
    used: dict[int, set[int]] = {}
    color: dict[int, int] = {}
    for k in order:
        e = H.edges[int(k)]
        taken = set()
        for v in members(e):
            taken |= used.get(v, set())
        free = [c for c in range(1, len(taken) + extra + 2) if c not in taken]
        c = _pick(rng, free[: extra + 1])
        color[e] = c
        for v in members(e):
            used.setdefault(v, set()).add(c)
    return ColoredHypergraph(H, [color[e] for e in H.edges])


def covering_family(rng, n: int, r: int, extra_p: float) -> Hypergraph:
    """Disjoint edges covering [n] (the last one wrapping) plus random edges."""
    base = []
    for k in range(0, n, r):
        block = [(k + j) % n + 1 for j in range(r)]
        base.append(vset(block))
    rnd = random_family(rng, n, r, extra_p)
    return Hypergraph(n, r, set(base) | set(rnd.edges))


# ---------------------------------------------------------------------------


def _t12(rng):
    r = _pick(rng, [2, 3])
    n = int(rng.integers(2 * r + 1, 10))
    kind = int(rng.integers(3))
    if kind == 0:
        H = relabel(rng, one_star(n, r))
    elif kind == 1:
        H = random_family(rng, n, r, rng.uniform(0.5, 1.0))
    else:
        H = intersecting_mix(rng, n, r)
    return H, {}


def _t13(rng):
    r, s = _pick(rng, [2, 3]), _pick(rng, [2, 3])
    lo = (2 * s - 1) * r - (s - 1)
    n = int(rng.integers(lo, max(lo, 10) + 1))
    if rng.random() < 0.5:
        H = cover_family(n, r, range(1, s))
        H = Hypergraph(n, r, set(H.edges) | {random_set(rng, n, r) for _ in range(int(rng.integers(1, 4)))})
        H = relabel(rng, H)
    else:
        H = random_family(rng, n, r, rng.uniform(0.3, 1.0))
    return H, {"s": s}


def _t14(rng):
    r = _pick(rng, [3, 3, 4])
    n = int(rng.integers(2 * r + 2, 2 * r + 4))
    return intersecting_mix(rng, n, r), {}


def _hm_ore(lo_n: int) -> Sampler:
    def sample(rng):
        r = 3
        n = int(rng.integers(lo_n, lo_n + 3))
        kind = int(rng.integers(3))
        if kind == 0:
            H = subfamily(rng, hilton_milner(n, r), rng.uniform(0.7, 1.0))
        elif kind == 1:
            H = subfamily(rng, triangle_family(n), rng.uniform(0.7, 1.0))
        else:
            H = greedy_intersecting(rng, n, r, tries=200)
        return relabel(rng, H), {}
    return sample


def _t16(rng):
    r, s = (2, _pick(rng, [2, 3])) if rng.random() < 0.6 else (3, 2)
    n = 3 * r * r * (s - 1) + int(rng.integers(0, 3))
    if rng.random() < 0.5:
        T = range(1, s)
        H = Hypergraph(n, r, set(cover_family(n, r, T).edges)
                       | set(random_family(rng, n, r, rng.uniform(0.0, 0.3)).edges))
    else:
        H = random_family(rng, n, r, rng.uniform(0.2, 0.9))
    return relabel(rng, H), {"s": s}


def _t17(rng):
    # s = 1 keeps n > 3 r^2 s at desk scale; the families must be properly colored
    r, n = 3, int(rng.integers(28, 31))
    H = covering_family(rng, n, r, rng.uniform(0.0, 0.002))
    return [proper_coloring(rng, relabel(rng, H), extra=2)], {}


def _cross_pair(rng, n, r, nontrivial=False):
    if nontrivial and n >= 2 * r:
        F = relabel(rng, hilton_milner(n, r))
    else:
        F = intersecting_mix(rng, n, r)
    A, B = subfamily(rng, F), subfamily(rng, F)
    return A, B


def _t18(rng):
    r = _pick(rng, [2, 3])
    n = int(rng.integers(2 * r + 1, 10))
    return _cross_pair(rng, n, r), {}


def _t19(rng):
    r, n = 2, int(rng.integers(16, 19))
    if rng.random() < 0.2:
        r, n = 3, 36
        S = relabel(rng, one_star(n, r))
        return (subfamily(rng, S, rng.uniform(0.9, 1.0)), subfamily(rng, S, rng.uniform(0.9, 1.0))), {}
    return _cross_pair(rng, n, r), {}


def _rainbow_edge(rng):
    r, s = 2, _pick(rng, [1, 1, 2])
    n = 3 * r * r * s + int(rng.integers(0, 2))
    fams = []
    for _ in range(s):
        H = random_family(rng, n, r, rng.uniform(0.05, 0.2))
        fams.append(proper_coloring(rng, H))
    return fams, {}


def _obs(rng):
    r = _pick(rng, [2, 3])
    n = int(rng.integers(r + 1, 9))
    H = random_family(rng, n, r)
    return (subfamily(rng, H), H), {}


def _l22(rng):
    r = _pick(rng, [2, 3, 4])
    n = int(rng.integers(r + 1, 10))
    if rng.random() < 0.2 and n % r == 0:
        return relabel(rng, perfect_matching(n, r)), {}
    return random_family(rng, n, r), {}


def _regular_intersecting(rng):
    """Regular intersecting families on [n] plus random intersecting ones."""
    kind = int(rng.integers(4))
    if kind == 0:
        return relabel(rng, fano())
    if kind == 1:
        r = _pick(rng, [2, 3])
        n = 2 * r - 1
        return Hypergraph(n, r, all_sets(n, r))
    if kind == 2:
        r = _pick(rng, [2, 3])
        return Hypergraph(int(rng.integers(r, 9)), r, ())
    r = _pick(rng, [2, 3])
    return intersecting_mix(rng, int(rng.integers(2 * r, 10)), r)


def _t23(rng):
    return _regular_intersecting(rng), {}


def _l24(rng):
    H = _regular_intersecting(rng)
    if H.n < 2 * H.r + 1:
        H = Hypergraph(2 * H.r + 1 + int(rng.integers(2)), H.r, H.edges)
    return H, {}


def _t25(rng):
    r = _pick(rng, [3, 4])
    n = int(rng.integers(2 * r, 2 * r + 3))
    if r == 3 and n == 7 and rng.random() < 0.3:
        return relabel(rng, fano()), {}
    return intersecting_mix(rng, n, r), {}


def _t26(rng):
    r = _pick(rng, [3, 4])
    n = int(rng.integers(2 * r + 1, 2 * r + 3))
    return intersecting_mix(rng, n, r), {"i": int(rng.integers(2, r + 1))}


def _t27(rng):
    r = _pick(rng, [3, 4])
    n = int(rng.integers(2 * r + 1, 2 * r + 3))
    if r == 3 and n == 7 and rng.random() < 0.5:
        return subfamily(rng, relabel(rng, fano()), rng.uniform(0.6, 1.0)), {}
    return intersecting_mix(rng, n, r), {}


def _t28(rng):
    r, ell = 3, 4
    n = r * ell + int(rng.integers(0, 2))
    Ts = [vset(range(k * ell + 1, (k + 1) * ell + 1)) for k in range(3)]
    pool = [e for e in all_sets(n, r) if all(e & T for T in Ts)]
    H = greedy_intersecting(rng, n, r, pool=pool, tries=300)
    return H, {"ell": ell, "T": Ts}


def _t29(rng):
    t = _pick(rng, [1, 2])
    r = _pick(rng, [3, 4])
    n = max((t + 1) * (r - t + 1), r + 1) + int(rng.integers(0, 3))
    if rng.random() < 0.5:
        H = subfamily(rng, t_star(n, r, range(1, t + 1)))
        H = greedy_intersecting(rng, n, r, t=t, seed_family=H, tries=50)
    else:
        H = greedy_intersecting(rng, n, r, t=t)
    return relabel(rng, H), {"t": t}


def _l210(rng):
    r, s = _pick(rng, [2, 3]), _pick(rng, [1, 2, 3])
    n = r * s + int(rng.integers(1, 5))
    H = random_family(rng, n, r, rng.uniform(0.4, 1.0))
    roots = sorted((rng.choice(n, size=s, replace=False) + 1).tolist())
    return H, {"roots": roots}


def _t211(rng):
    r = _pick(rng, [2, 3])
    n = int(rng.integers(2 * r + 1, 10))
    return _cross_pair(rng, n, r, nontrivial=True), {}


def _l51(rng):
    n = int(rng.integers(2, 13))
    s = int(rng.integers(1, n // 2 + 1))
    return random_family(rng, n, 2, rng.uniform(0.2, 1.0)), {"s": s}


def _cor5(rng):
    r = 2
    sizes = sorted((int(x) for x in rng.integers(1, 3, size=int(rng.integers(1, 3)))), reverse=True)
    N = sum(k - 1 for k in sizes)
    n = max(3 * r * r * N, 2 * (N + 1)) + int(rng.integers(0, 2))
    H = random_family(rng, n, r, rng.uniform(0.3, 1.0))
    coloring = [int(c) for c in rng.integers(1, len(sizes) + 1, size=len(H))]
    return H, {"sizes": sizes, "coloring": coloring}


SAMPLERS: dict[str, Sampler] = {
    "T1.2": _t12,
    "T1.3": _t13,
    "T1.4": _t14,
    "T1.5": _hm_ore(18),
    "P4.1": _hm_ore(18),
    "T1.6": _t16,
    "T1.7": _t17,
    "T1.8": _t18,
    "T1.9": _t19,
    "RAINBOW_EDGE": _rainbow_edge,
    "OBS": _obs,
    "L2.2": _l22,
    "T2.3": _t23,
    "L2.4": _l24,
    "T2.5": _t25,
    "T2.6": _t26,
    "T2.7": _t27,
    "T2.8": _t28,
    "T2.9": _t29,
    "L2.10": _l210,
    "T2.11": _t211,
    "L5.1": _l51,
    "COR5": _cor5,
}


def sample(entry_id: str, rng: np.random.Generator):
    """One in-domain instance and its parameters for ``entry_id``."""
    return SAMPLERS[entry_id](rng)

"""Exhaustive scans over bounded instance spaces.

Three spaces are supported:

* every graph on n <= 7 vertices, for the graph matching threshold entry;
* every c-coloring of a fixed hypergraph (c^|edges| <= 2^20), for the
  monochromatic-matching arrow entry;
* every subfamily of a base family with at most 22 edges, for any
  single-hypergraph entry.

Work is cut into contiguous index ranges that may run on separate
processes; results are merged in range order, so reports do not depend on
the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .. import kernels
from ..hypergraph import Hypergraph
from ..setcore import Bound, eval_bound
from .registry import Arity, Status, check, coloring_count, coloring_scan, get
from .view import View

GRAPH_N_MAX = 7
SUBFAMILY_MAX = 22
MAX_STORED = 20


@dataclass
class ScanReport:
    entry: str
    params: dict
    space: str
    total: int
    counts: dict[Status, int]
    out_of_domain: int
    violations: list
    extra: list[tuple[str, object]] = field(default_factory=list)

    @property
    def violation_count(self) -> int:
        return self.counts.get(Status.VIOLATION, 0)


def _chunks(total: int, pieces: int) -> list[tuple[int, int]]:
    pieces = max(1, min(pieces, total))
    step, extra = divmod(total, pieces)
    out, lo = [], 0
    for k in range(pieces):
        hi = lo + step + (k < extra)
        out.append((lo, hi))
        lo = hi
    return out


def _map(fn, jobs, workers: int):
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs))
    return [fn(job) for job in jobs]


# graphs --------------------------------------------------------------------


def _graph_job(args):
    n, lo, hi = args
    hyp, viol, first = kernels.graph_scan(n, lo, hi)
    return hyp.tolist(), viol.tolist(), first.tolist()


def graph_from_code(n: int, code: int) -> Hypergraph:
    """Graph whose k-th lexicographic pair (u < v) is present iff bit k is set."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    return Hypergraph(n, 2, ((1 << (u - 1)) | (1 << (v - 1))
                             for k, (u, v) in enumerate(pairs) if code >> k & 1))


def graph_scan(n_values, s_values=None, workers: int = 1) -> ScanReport:
    """All graphs on each n with every admissible s (n >= 2s)."""
    n_values = sorted(set(n_values))
    if not n_values or n_values[0] < 2 or n_values[-1] > GRAPH_N_MAX:
        raise ValueError(f"graph scans need 2 <= n <= {GRAPH_N_MAX}")
    counts = {s: 0 for s in Status}
    total, violations, extra = 0, [], []
    for n in n_values:
        space = 1 << (n * (n - 1) // 2)
        jobs = [(n, lo, hi) for lo, hi in _chunks(space, workers * 4 if workers > 1 else 1)]
        parts = _map(_graph_job, jobs, workers)
        smax = n // 2
        chosen = [s for s in range(1, smax + 1) if s_values is None or s in s_values]
        for s in chosen:
            hyp = sum(p[0][s] for p in parts)
            viol = sum(p[1][s] for p in parts)
            firsts = [p[2][s] for p in parts if p[2][s] >= 0]
            counts[Status.VACUOUS] += space - hyp
            counts[Status.CONFIRMED] += hyp - viol
            counts[Status.VIOLATION] += viol
            total += space
            extra.append((f"n={n} s={s}", f"graphs={space} hypothesis={hyp} violations={viol}"))
            if firsts and len(violations) < MAX_STORED:
                violations.append(graph_from_code(n, min(firsts)))
    params = {"n": ",".join(map(str, n_values))}
    if s_values is not None:
        params["s"] = ",".join(map(str, sorted(s_values)))
    return ScanReport("L5.1", params, "graphs", total, counts, 0, violations, extra)


# colorings -----------------------------------------------------------------


def _coloring_job(args):
    H, sizes, lo, hi = args
    return coloring_scan(H, sizes, lo, hi)


def coloring_scan_report(H: Hypergraph, sizes, workers: int = 1) -> ScanReport:
    """Every coloring of H checked against the monochromatic-matching arrow."""
    sizes = list(sizes)
    entry = get("COR5")
    total = coloring_count(len(H), len(sizes))
    N = sum(k - 1 for k in sizes)
    bound = eval_bound(Bound.MATCH_ORE, H.n, H.r, s=N + 1)
    hyp = View.of(H).sigma_above(bound)
    jobs = [(H, sizes, lo, hi) for lo, hi in _chunks(total, workers * 4 if workers > 1 else 1)]
    bad = next((b for b in _map(_coloring_job, jobs, workers) if b is not None), None)
    counts = {s: 0 for s in Status}
    key = Status.VACUOUS if not hyp else (Status.VIOLATION if bad is not None else Status.CONFIRMED)
    counts[key] = 1
    extra = [("colorings", total), ("hypothesis", "holds" if hyp else "fails"),
             ("arrow", "holds" if bad is None else "fails")]
    if bad is not None:
        extra.append(("coloring", " ".join(map(str, bad))))
    in_domain = entry.domain(H.n, H.r, {"sizes": sizes})
    return ScanReport("COR5", {"sizes": sizes}, "colorings", 1, counts, int(not in_domain),
                      [H] if key is Status.VIOLATION else [], extra)


# subfamilies ---------------------------------------------------------------


def _subfamily_job(args):
    entry_id, base_edges, n, r, params, lo, hi = args
    counts = {s: 0 for s in Status}
    ood, bad = 0, []
    for code in range(lo, hi):
        H = Hypergraph(n, r, (e for k, e in enumerate(base_edges) if code >> k & 1))
        v = check(entry_id, H, **params)
        counts[v.status] += 1
        ood += not v.in_domain
        if v.status is Status.VIOLATION and len(bad) < MAX_STORED:
            bad.append(H.edges)
    return counts, ood, bad


def subfamily_scan(entry_id: str, base: Hypergraph, workers: int = 1, **params) -> ScanReport:
    entry = get(entry_id)
    if entry.arity is not Arity.SINGLE:
        raise ValueError(f"{entry_id} is not a single-hypergraph entry")
    m = len(base)
    if m > SUBFAMILY_MAX:
        raise ValueError(f"base family has {m} edges; subfamily scans allow at most {SUBFAMILY_MAX}")
    total = 1 << m
    jobs = [(entry_id, base.edges, base.n, base.r, params, lo, hi)
            for lo, hi in _chunks(total, workers * 4 if workers > 1 else 1)]
    counts = {s: 0 for s in Status}
    ood, violations = 0, []
    for part_counts, part_ood, part_bad in _map(_subfamily_job, jobs, workers):
        for s, c in part_counts.items():
            counts[s] += c
        ood += part_ood
        violations.extend(part_bad)
    violations = [Hypergraph(base.n, base.r, e) for e in violations[:MAX_STORED]]
    extra = [("base_edges", m)]
    return ScanReport(entry_id, dict(params), "subfamilies", total, counts, ood, violations, extra)


def exhaustive_scan(entry_id: str, *, n_values=None, s_values=None, base: Hypergraph | None = None,
                    sizes=None, workers: int = 1, **params) -> ScanReport:
    """Dispatch to the scan matching the arguments; raises when over the caps."""
    if base is not None:
        if entry_id == "COR5":
            if sizes is None:
                raise ValueError("COR5 scans need sizes")
            return coloring_scan_report(base, sizes, workers)
        return subfamily_scan(entry_id, base, workers, **params)
    if entry_id == "L5.1":
        if n_values is None:
            raise ValueError("L5.1 scans need n values")
        return graph_scan(n_values, s_values, workers)
    raise ValueError(f"no exhaustive space for {entry_id} without a base family")

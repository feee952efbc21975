"""Seeded simulated annealing for counterexamples to registry entries.

The state is an edge-membership vector over the colex-ordered r-subsets of
[n].  A move toggles one candidate edge; when the entry demands pairwise
intersections of size >= t, adding an edge first removes every current
edge that meets it in fewer than t points (ascending bitmask order).

The objective is the registry margin pair (deficit, slack), compared
lexicographically; a state with deficit 0 and slack < 0 is a violation.
Runs depend only on (entry, params, n, seed, budget), so reports are
byte-identical across repetitions and worker counts.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .. import kernels
from ..hypergraph import Hypergraph
from ..setcore import binom
from .registry import Arity, Status, check, get, resolve_params
from .view import View

WARMUP = 100
COOLING = 0.999
TARGET_ACCEPT = 0.8
MAX_STORED = 10


@dataclass
class RunResult:
    n: int
    steps: int
    in_domain: bool
    t0: float
    best: tuple[int, int]
    best_edges: tuple[int, ...]
    trace: list[tuple[int, int, int]] = field(default_factory=list)
    violations: list[tuple[int, ...]] = field(default_factory=list)
    violation_count: int = 0


@dataclass
class HuntReport:
    entry: str
    r: int
    params: dict
    n_values: tuple[int, ...]
    seed: int
    budget: int
    runs: list[RunResult]
    conjecture: bool = False

    @property
    def violation_count(self) -> int:
        return sum(run.violation_count for run in self.runs)

    @property
    def status(self) -> Status:
        return Status.VIOLATION if self.violation_count else Status.CONFIRMED


class _State:
    def __init__(self, n: int, r: int, pool: np.ndarray, t: int | None):
        self.n, self.r, self.t = n, r, t
        self.table = kernels.subset_table(n, r)
        self.lo, self.hi = kernels.subset_words(n, r)
        self.pool = pool
        self.is_edge = np.zeros(self.table.shape[0], dtype=np.bool_)
        self.deg = np.zeros(n, dtype=np.int64)

    def _set(self, k: int, on: bool) -> None:
        self.is_edge[k] = on
        self.deg[self.table[k]] += 1 if on else -1

    def conflicts(self, k: int) -> np.ndarray:
        if self.t is None:
            return np.empty(0, dtype=np.int64)
        cur = np.flatnonzero(self.is_edge)
        meet = (np.bitwise_count(self.lo[cur] & self.lo[k])
                + np.bitwise_count(self.hi[cur] & self.hi[k]))
        return cur[meet < self.t]

    def toggle(self, k: int) -> list[tuple[int, bool]]:
        """Apply a move; returns the (rank, new state) changes for undo."""
        if self.is_edge[k]:
            self._set(k, False)
            return [(k, False)]
        changes = [(int(j), False) for j in self.conflicts(k)]
        for j, _ in changes:
            self._set(j, False)
        self._set(k, True)
        changes.append((k, True))
        return changes

    def undo(self, changes) -> None:
        for k, on in reversed(changes):
            self._set(k, not on)

    def view(self) -> View:
        return View(self.n, self.r, is_edge=self.is_edge, deg=self.deg, conflict_free=self.t)

    def edges(self) -> tuple[int, ...]:
        idx = np.flatnonzero(self.is_edge)
        return tuple(int(a) | (int(b) << 64) for a, b in zip(self.lo[idx], self.hi[idx]))


def _delta(new: tuple[int, int], old: tuple[int, int]) -> int:
    if new[0] != old[0]:
        return new[0] - old[0]
    return new[1] - old[1]


def _pool(entry, n: int, r: int, p: dict) -> np.ndarray:
    total = binom(n, r)
    keep = entry.pool(n, r, p)
    if keep is None:
        return np.arange(total, dtype=np.int64)
    lo, hi = kernels.subset_words(n, r)
    masks = [int(a) | (int(b) << 64) for a, b in zip(lo, hi)]
    return np.array([k for k, e in enumerate(masks) if keep(e)], dtype=np.int64)


def run_one(entry_id: str, n: int, r: int, params: dict, seed: int, budget: int) -> RunResult:
    """Anneal at a single n with its own seed stream."""
    entry = get(entry_id)
    p = resolve_params(entry, n, r, params)
    in_domain = bool(entry.domain(n, r, p))
    rng = np.random.default_rng(np.random.SeedSequence([seed, n]))
    state = _State(n, r, _pool(entry, n, r, p), entry.conflict(p))
    if state.pool.size == 0:
        raise ValueError(f"{entry_id}: no candidate edges at n={n}, r={r}")

    def score() -> tuple[int, int]:
        d, s = entry.margins(state.view(), p)
        return int(d), int(s)

    def pick() -> int:
        return int(state.pool[rng.integers(state.pool.size)])

    # random half-density start, repaired edge by edge in a random order
    for k in rng.permutation(state.pool)[: state.pool.size // 2]:
        if not state.is_edge[k]:
            state.toggle(int(k))
    cur = score()

    uphill = []
    for _ in range(WARMUP):
        changes = state.toggle(pick())
        d = _delta(score(), cur)
        if d > 0:
            uphill.append(d)
        state.undo(changes)
    t0 = float(np.mean(uphill)) / math.log(1 / TARGET_ACCEPT) if uphill else 1.0

    best, best_edges = cur, state.edges()
    trace = [(0, cur[0], cur[1])]
    seen: set[tuple[int, ...]] = set()
    stored: list[tuple[int, ...]] = []

    def note_violation() -> None:
        edges = state.edges()
        if edges in seen:
            return
        seen.add(edges)
        if len(stored) < MAX_STORED:
            verdict = check(entry_id, Hypergraph(n, r, edges), **params)
            if verdict.status is not Status.VIOLATION:
                raise AssertionError(f"{entry_id}: margin and check disagree at n={n}")
            stored.append(edges)

    if cur[0] == 0 and cur[1] < 0:
        note_violation()
    temp = t0
    for step in range(1, budget + 1):
        changes = state.toggle(pick())
        new = score()
        d = _delta(new, cur)
        if d <= 0 or rng.random() < math.exp(-d / temp):
            cur = new
            if cur < best:
                best, best_edges = cur, state.edges()
                trace.append((step, cur[0], cur[1]))
            if cur[0] == 0 and cur[1] < 0:
                note_violation()
        else:
            state.undo(changes)
        temp *= COOLING
    return RunResult(n, budget, in_domain, t0, best, best_edges, trace, stored, len(seen))


def _run_args(args):
    return run_one(*args)


def hunt(entry_id: str, n_values, r: int, seed: int, budget: int, *,
         workers: int = 1, **params) -> HuntReport:
    """Split ``budget`` evenly over ``n_values`` (earlier n get the remainder)."""
    entry = get(entry_id)
    if entry.arity is not Arity.SINGLE or not entry.huntable:
        raise ValueError(f"{entry_id} does not support hunting")
    n_values = tuple(sorted(set(int(n) for n in n_values)))
    if not n_values:
        raise ValueError("empty n range")
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    for n in n_values:
        if n > 30 or n < r or r < 1:
            raise ValueError(f"hunts need 1 <= r <= n <= 30, got n={n}, r={r}")
    share, extra = divmod(budget, len(n_values))
    jobs = [(entry_id, n, r, params, seed, share + (k < extra))
            for k, n in enumerate(n_values)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(_run_args, jobs))
    else:
        runs = [_run_args(job) for job in jobs]
    runs.sort(key=lambda run: run.n)
    return HuntReport(entry_id, r, dict(params), n_values, seed, budget, runs, entry.conjecture)

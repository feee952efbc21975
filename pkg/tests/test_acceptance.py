"""Acceptance gate: one PASS/FAIL line per criterion, at its stated tolerance.

Every numeric comparison is exact integer equality; runtime limits are
checked alongside.  Lines are printed as they are decided and repeated in
the pytest terminal summary.
"""

from __future__ import annotations

import math
import time
from itertools import combinations, product

import numpy as np
import pytest

from orelab.cli import main
from orelab.constructions import cover_family, fano, hilton_milner, one_star, perfect_matching
from orelab.hypergraph import ColoredHypergraph, Hypergraph, is_regular, ore_degree, vset
from orelab.matching import max_matching, rainbow_matching
from orelab.setcore import Bound, binom, eval_bound
from orelab.verify import ENTRIES, Status, check
from orelab.verify.hunt import hunt
from orelab.verify.samplers import proper_coloring, random_family, sample
from orelab.verify.scan import graph_scan

from conftest import ACCEPTANCE_LINES


def report(number: int, ok: bool, detail: str, elapsed: float, limit: float | None):
    timing = f"{elapsed:.1f}s" + (f" (limit {limit:.0f}s)" if limit is not None else "")
    within = limit is None or elapsed < limit
    verdict = "PASS" if ok and within else "FAIL"
    line = f"criterion {number}: {verdict} {detail}; {timing}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line
    assert within, line


def test_criterion_01_star_ore_tightness():
    t = time.perf_counter()
    bad = []
    cases = 0
    for r in (3, 4):
        for n in range(2 * r + 2, 15):
            cases += 1
            got = ore_degree(one_star(n, r))
            if got != r * math.comb(n - 2, r - 2):
                bad.append((n, r, got))
    report(1, not bad, f"star sigma = r C(n-2,r-2) on {cases} (n,r); mismatches={bad}",
           time.perf_counter() - t, 10)


def test_criterion_02_hm_ore_tightness():
    t = time.perf_counter()
    bad = []
    for n in (12, 13, 14, 15, 36):
        got = ore_degree(hilton_milner(n, 3))
        want = 3 * (math.comb(n - 2, 1) - math.comb(n - 5, 1))
        if not (got == want == 9):
            bad.append((n, got))
    report(2, not bad, f"hm sigma = 9 for n in 12..15 and 36; mismatches={bad}",
           time.perf_counter() - t, 10)


def test_criterion_03_cover_tightness():
    t = time.perf_counter()
    bad, cases, example = [], 0, None
    for s in (2, 3, 4):
        for n in range(3 * s, 16):
            cases += 1
            H = cover_family(n, 3, range(1, s))
            sigma = ore_degree(H)
            nu = max_matching(H).size
            want = 3 * (math.comb(n - 1, 2) - math.comb(n - s, 2))
            if sigma != want or nu != s - 1:
                bad.append((n, s, sigma, nu))
            if (n, s) == (12, 4):
                example = (sigma.value, nu)
    ok = not bad and example == (81, 3)
    report(3, ok, f"cover sigma and nu = s-1 on {cases} (n,s); n=12,s=4 gives {example}; "
           f"mismatches={bad}", time.perf_counter() - t, 30)


def test_criterion_04_edge_lower_bound_suite():
    t = time.perf_counter()
    rng = np.random.default_rng(4)
    violations = equalities = irregular_eq = 0
    for n, r in [(8, 2), (9, 3), (10, 3), (12, 4)]:
        done = 0
        while done < 1000:
            H = random_family(rng, n, r, p=float(rng.uniform(0.02, 0.98)))
            if H.is_complete():
                continue
            done += 1
            sigma = ore_degree(H).value
            lhs, rhs = r * r * len(H), n * sigma
            violations += lhs < rhs
            if lhs == rhs:
                equalities += 1
                irregular_eq += is_regular(H) is None
    pm = perfect_matching(4, 2)
    pm_sigma = ore_degree(pm).value
    pm_ok = len(pm) == 2 and pm_sigma == 2 and 4 * len(pm) == 4 * pm_sigma and is_regular(pm) == 1
    ok = violations == 0 and irregular_eq == 0 and pm_ok
    report(4, ok, f"4000 random families: violations={violations}, equality cases={equalities}, "
           f"irregular equality={irregular_eq}, perfect-matching equality ok={pm_ok}",
           time.perf_counter() - t, 60)


def _nu_by_subsets(edges):
    best = 0
    m = len(edges)
    for code in range(1 << m):
        used, count, ok = 0, 0, True
        for k in range(m):
            if code >> k & 1:
                if edges[k] & used:
                    ok = False
                    break
                used |= edges[k]
                count += 1
        if ok and count > best:
            best = count
    return best


def test_criterion_05_matching_oracle():
    t = time.perf_counter()
    rng = np.random.default_rng(5)
    mismatches = 0
    for _ in range(500):
        n = int(rng.integers(4, 13))
        r = int(rng.choice([2, 3, 4]))
        pool = [vset(c) for c in combinations(range(1, n + 1), r)]
        m = int(rng.integers(0, min(12, len(pool)) + 1))
        pick = rng.choice(len(pool), size=m, replace=False)
        H = Hypergraph(n, r, (pool[k] for k in pick))
        mismatches += max_matching(H).size != _nu_by_subsets(list(H.edges))
    report(5, mismatches == 0, f"500 random families, <= 12 edges: mismatches={mismatches}",
           time.perf_counter() - t, 60)


def _graph_criterion(n: int, limit: float):
    t = time.perf_counter()
    rep = graph_scan([n])
    graphs = 1 << (n * (n - 1) // 2)
    ok = rep.violation_count == 0 and rep.total == graphs * (n // 2)
    report(6, ok, f"all {graphs} graphs on n={n}, s=1..{n // 2}: "
           f"violations={rep.violation_count}", time.perf_counter() - t, limit)


def test_criterion_06_graph_threshold_n6():
    _graph_criterion(6, 60)


@pytest.mark.slow
def test_criterion_06_graph_threshold_n7():
    _graph_criterion(7, 20 * 60)


def test_criterion_07_fano_and_regular_degree_hunts():
    t = time.perf_counter()
    cap = eval_bound(Bound.REGULAR_CAP, 7, 3)
    fano_ok = len(fano()) == 7 == cap
    found = {}
    for n, r in [(7, 2), (8, 3)]:
        rep = hunt("L2.4", [n], r, seed=1, budget=100_000)
        found[(n, r)] = rep.violation_count
    ok = fano_ok and not any(found.values())
    report(7, ok, f"|Fano| = 7 = cap {cap}; regular-degree hunts discoveries={found}",
           time.perf_counter() - t, None)


def _rainbow_brute(families):
    lists = [list(zip(C.base.edges, C.colors)) for C in families]
    for combo in product(*lists):
        edges = [e for e, _ in combo]
        colors = [c for _, c in combo]
        if len(set(colors)) < len(colors):
            continue
        used, ok = 0, True
        for e in edges:
            if e & used:
                ok = False
                break
            used |= e
        if ok:
            return True
    return False


def test_criterion_08_rainbow_oracle():
    t = time.perf_counter()
    rng = np.random.default_rng(8)
    mismatches = found = 0
    for _ in range(200):
        n = int(rng.integers(6, 11))
        s = int(rng.integers(1, 4))
        fams = []
        for _ in range(s):
            H = random_family(rng, n, 3, p=float(rng.uniform(0.02, 0.25)))
            fams.append(proper_coloring(rng, H, extra=int(rng.integers(0, 3))))
        got = rainbow_matching(fams)
        want = _rainbow_brute(fams)
        found += want
        mismatches += (got is not None) != want
    report(8, mismatches == 0, f"200 colored family lists (s <= 3): mismatches={mismatches}, "
           f"with a rainbow matching={found}", time.perf_counter() - t, 60)


def test_criterion_09_soundness_battery():
    t = time.perf_counter()
    rng = np.random.default_rng(9)
    proven = [e.id for e in ENTRIES if not e.conjecture]
    total = 10_000
    per, extra = divmod(total, len(proven))
    counts = {s: 0 for s in Status}
    out_of_domain, bad = 0, []
    for k, entry_id in enumerate(proven):
        for _ in range(per + (k < extra)):
            inst, params = sample(entry_id, rng)
            v = check(entry_id, inst, **params)
            counts[v.status] += 1
            out_of_domain += not v.in_domain
            if v.status is Status.VIOLATION:
                bad.append(entry_id)
    ok = not bad and out_of_domain == 0 and sum(counts.values()) == total
    summary = " ".join(f"{s.value}={c}" for s, c in counts.items())
    report(9, ok, f"{total} in-domain instances over {len(proven)} entries: {summary}, "
           f"out_of_domain={out_of_domain}", time.perf_counter() - t, 600)


def _cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_criterion_10_determinism(capsys, tmp_path):
    t = time.perf_counter()
    argv = ["hunt", "C8.1", "--r", "3", "--s", "3", "--n", "12..20", "--seed", "1",
            "--budget", "100000"]
    code1, first = _cli(capsys, argv)
    code2, second = _cli(capsys, argv)
    code4, fourw = _cli(capsys, argv + ["--workers", "4"])
    hunt_same = first == second == fourw and code1 == code2 == code4 == 0
    star = tmp_path / "hm.hgf"
    from orelab import hgf
    star.write_text(hgf.serialize(Hypergraph(9, 3, hilton_milner(9, 3).edges[:14])))
    pm = tmp_path / "pm.hgf"
    pm.write_text(hgf.serialize(perfect_matching(12, 3)))
    scans = {
        "graphs": ["verify", "L5.1", "--exhaustive", "--n", "2..6"],
        "subfamilies": ["verify", "T2.5", str(star), "--exhaustive"],
        "colorings": ["verify", "COR5", str(pm), "--exhaustive", "--sizes", "2,2"],
    }
    scan_same = {}
    for name, base in scans.items():
        a = _cli(capsys, base + ["--workers", "1"])
        b = _cli(capsys, base + ["--workers", "4"])
        scan_same[name] = a == b and a[0] == 0
    ok = hunt_same and all(scan_same.values())
    report(10, ok, f"hunt report byte-identical twice and with 4 workers={hunt_same}; "
           f"scans identical across workers={scan_same}", time.perf_counter() - t, None)

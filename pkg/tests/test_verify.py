from __future__ import annotations

import math
from itertools import combinations

import numpy as np
import pytest

from orelab.constructions import (
    cover_family,
    fano,
    hilton_milner,
    one_star,
    perfect_matching,
    t_star,
    triangle_family,
)
from orelab.hypergraph import ColoredHypergraph, Hypergraph, build, members, ore_degree, vset
from orelab.verify import ENTRIES, REGISTRY, Arity, Status, check
from orelab.verify.averaging import averaging_lower_bound
from orelab.verify.hunt import hunt
from orelab.verify.registry import digest
from orelab.verify.report import hunt_kv, hunt_text, scan_text, verdict_kv, verdict_text
from orelab.verify.samplers import SAMPLERS, greedy_intersecting, sample
from orelab.verify.scan import exhaustive_scan, graph_scan, subfamily_scan
from orelab.verify.tightness import verify_tightness

from conftest import brute_nu, brute_sigma, random_hypergraph, tuples

# one id per numbered statement, plus the tool entries
# (sigma monotonicity, the edge-count rainbow variant, the small-r region
# of the non-trivial Ore bound)
NUMBERED = {
    "T1.2", "T1.3", "T1.4", "T1.5", "T1.6", "T1.7", "T1.8", "T1.9", "C1.1",
    "L2.2", "L2.4", "L2.10", "L5.1",
    "T2.3", "T2.5", "T2.6", "T2.7", "T2.8", "T2.9", "T2.11",
    "COR5", "C8.1",
}
TOOLS = {"OBS", "RAINBOW_EDGE", "P4.1"}


def test_registry_ids_complete():
    ids = [e.id for e in ENTRIES]
    assert len(ids) == len(set(ids))
    assert set(ids) == NUMBERED | TOOLS
    assert {e.id for e in ENTRIES if e.conjecture} == {"C1.1", "C8.1"}


def test_every_proven_entry_has_a_sampler():
    proven = {e.id for e in ENTRIES if not e.conjecture}
    assert set(SAMPLERS) == proven


# check examples ----------------------------------------------------------------


def test_check_star_equality_case():
    v = check("T1.4", one_star(10, 3))
    assert v.hypothesis_holds and v.conclusion_holds and v.status is Status.CONFIRMED
    assert v.witness["sigma"] == "24" and v.in_domain


def test_check_edge_lower_bound_random(rng):
    for _ in range(50):
        H = random_hypergraph(rng, int(rng.integers(4, 10)), 3)
        v = check("L2.2", H)
        assert v.status is (Status.VACUOUS if H.is_complete() else Status.CONFIRMED)


def test_check_cover_is_vacuous_at_threshold():
    v = check("T1.6", cover_family(12, 3, [1, 2, 3]), s=4)
    assert not v.hypothesis_holds and v.status is Status.VACUOUS
    assert v.witness["sigma"] == "81"
    # same instance is far below the region n >= 3 r^2 (s - 1)
    assert not v.in_domain


def test_out_of_domain_is_evaluated_and_flagged():
    v = check("T1.4", one_star(7, 3))
    assert not v.in_domain and v.status is Status.CONFIRMED


def test_conjecture_flag_and_status():
    v = check("C8.1", perfect_matching(9, 3), s=3)
    assert v.conjecture
    v = check("C8.1", cover_family(10, 3, [1]), s=2)
    assert v.status is Status.VACUOUS


def test_arity_and_parameter_errors():
    with pytest.raises(TypeError):
        check("T1.4", (one_star(8, 3), one_star(8, 3)))
    with pytest.raises(TypeError):
        check("T1.9", one_star(8, 3))
    with pytest.raises(TypeError):
        check("T1.7", [one_star(8, 3)])
    with pytest.raises(ValueError):
        check("T1.6", one_star(8, 3))
    with pytest.raises(ValueError):
        check("T2.9", one_star(8, 3), t=0)
    with pytest.raises(KeyError):
        check("T9.9", one_star(8, 3))


def test_triangle_family_against_third_cap():
    T = triangle_family(9)
    assert check("T2.7", T).status is Status.VACUOUS
    v = check("T2.7", T, triangle_exception=False)
    assert v.status is Status.VIOLATION


def test_cross_pair_with_complete_side():
    n, r = 36, 2
    K = Hypergraph(n, r, (vset(c) for c in combinations(range(1, n + 1), r)))
    v = check("T1.9", (one_star(n, r), K))
    assert v.status is Status.VACUOUS and not v.in_domain
    v = check("T1.9", (one_star(n, r), one_star(n, r)))
    assert v.status is Status.CONFIRMED and v.in_domain


def test_pair_and_colored_entries():
    A = one_star(9, 3)
    assert check("T1.8", (A, A)).status is Status.CONFIRMED
    sub = Hypergraph(9, 3, A.edges[::2])
    assert check("OBS", (sub, A)).status is Status.CONFIRMED
    assert check("OBS", (A, sub)).status is Status.VACUOUS
    C = ColoredHypergraph(perfect_matching(9, 3), [1, 2, 3])
    v = check("RAINBOW_EDGE", [C])
    assert v.status is Status.CONFIRMED and "rainbow" in v.witness
    with pytest.raises(ValueError):
        check("T1.7", [ColoredHypergraph(build(6, 3, [[1, 2, 3], [1, 4, 5]]), [1, 1], validate=False)])


def test_monochromatic_corollary():
    pm = perfect_matching(12, 3)
    v = check("COR5", pm, sizes=[2, 2], coloring=[1, 1, 2, 2])
    assert v.conclusion_holds
    v = check("COR5", build(6, 3, [[1, 2, 3], [4, 5, 6]]), sizes=[2, 2])
    assert not v.conclusion_holds and "coloring" in v.witness


def test_status_invariant_over_samples():
    rng = np.random.default_rng(7)
    for entry in ENTRIES:
        if entry.conjecture:
            continue
        for _ in range(5):
            inst, params = sample(entry.id, rng)
            v = check(entry.id, inst, **params)
            assert (v.status is Status.VIOLATION) == (v.hypothesis_holds and not v.conclusion_holds)
            assert (v.status is Status.VACUOUS) == (not v.hypothesis_holds)
            assert v.status is not Status.VIOLATION, (entry.id, v.witness)


# independent re-derivation of hypothesis and conclusion ------------------------


def _oracle(entry_id, H, p):
    n, r, E = H.n, H.r, tuples(H)
    sigma, _ = brute_sigma(n, r, E)
    sets = [set(e) for e in E]
    inter = all(a & b for a, b in combinations(sets, 2))
    common = set.intersection(*sets) if sets else set(range(1, n + 1))
    C = math.comb
    if entry_id == "T1.4":
        bound = r * C(n - 2, r - 2)
        full_star = any(len(E) == C(n - 1, r - 1) and x in common for x in range(1, n + 1))
        return inter, sigma is not None and (sigma < bound or (sigma == bound and full_star))
    if entry_id in ("T1.6", "L5.1", "C8.1"):
        s = p["s"]
        bound = r * (C(n - 1, r - 1) - C(n - s, r - 1))
        return sigma is None or sigma > bound, brute_nu(E) >= s
    if entry_id == "T1.3":
        s = p["s"]
        return len(E) > C(n, r) - C(n - s + 1, r), brute_nu(E) >= s
    if entry_id == "L2.2":
        if sigma is None:
            return False, True
        regular = len(set(H.degrees)) == 1
        lhs, rhs = r * r * len(E), n * sigma
        return True, lhs > rhs or (lhs == rhs and regular)
    if entry_id == "T2.5":
        return inter and not common, len(E) <= C(n - 1, r - 1) - C(n - r - 1, r - 1) + 1
    if entry_id == "T2.9":
        t = p["t"]
        return all(len(a & b) >= t for a, b in combinations(sets, 2)), len(E) <= C(n - t, r - t)
    raise KeyError(entry_id)


@pytest.mark.parametrize("entry_id,r,params", [
    ("T1.4", 3, {}), ("T1.6", 3, {"s": 2}), ("L5.1", 2, {"s": 2}), ("L5.1", 2, {"s": 3}),
    ("C8.1", 3, {"s": 2}), ("T1.3", 3, {"s": 2}), ("L2.2", 3, {}), ("T2.5", 3, {}),
    ("T2.9", 3, {"t": 2}),
])
def test_verdicts_match_independent_oracle(entry_id, r, params):
    rng = np.random.default_rng(hash(entry_id) % 2**32 + r)
    for k in range(80):
        n = int(rng.integers(2 * r, 10))
        if k % 2:
            H = greedy_intersecting(rng, n, r, t=params.get("t", 1))
        else:
            H = random_hypergraph(rng, n, r, p=rng.uniform(0.2, 1.0))
        v = check(entry_id, H, **params)
        hyp, concl = _oracle(entry_id, H, params)
        assert v.hypothesis_holds == hyp, (entry_id, tuples(H))
        if hyp:
            assert v.conclusion_holds == concl, (entry_id, tuples(H))


# tightness ---------------------------------------------------------------------


def test_tightness_examples():
    rep = verify_tightness("star", 10, 3)
    assert rep.ok and rep.rows[0] == ("sigma", 24, 24)
    rep = verify_tightness("hm", 12, 3)
    assert rep.ok and rep.rows[0] == ("sigma", 9, 9)
    rep = verify_tightness("cover", 12, 3, s=4)
    assert rep.ok and dict((k, g) for k, g, _ in rep.rows) == {"sigma": 81, "edges": 136, "nu": 3}
    assert verify_tightness("fano", 7, 3).ok
    assert verify_tightness("clique", 12, 3, s=4).ok
    assert verify_tightness("pm", 8, 2).ok
    assert verify_tightness("tstar", 8, 3, t=2).ok
    with pytest.raises(ValueError):
        verify_tightness("cover", 12, 3)


# exhaustive scans ----------------------------------------------------------------


def test_graph_scan_small():
    rep = graph_scan([4], [2])
    assert rep.total == 64 and rep.violation_count == 0
    rep = graph_scan(range(2, 7))
    assert rep.violation_count == 0
    assert rep.total == sum((1 << (n * (n - 1) // 2)) * (n // 2) for n in range(2, 7))
    with pytest.raises(ValueError):
        graph_scan([8])


def test_graph_scan_counts_match_oracle():
    # per-s hypothesis counts on n = 5 against a brute-force recount
    from orelab.verify.scan import graph_from_code
    rep = graph_scan([5])
    want = {}
    for code in range(1 << 10):
        H = graph_from_code(5, code)
        sigma, _ = brute_sigma(5, 2, tuples(H))
        for s in (1, 2):
            if sigma is None or sigma > 2 * (s - 1):
                want[s] = want.get(s, 0) + 1
    got = {s: int(v.split()[1].split("=")[1]) for k, v in rep.extra for s in [int(k.split("s=")[1])]}
    assert got == want


def test_subfamily_scan_t_intersecting():
    base = Hypergraph(7, 3, t_star(7, 3, [1, 2]).edges + (vset([1, 3, 4]), vset([2, 3, 5])))
    rep = subfamily_scan("T2.9", base, t=2)
    assert rep.total == 1 << 7 and rep.violation_count == 0
    assert rep.counts[Status.CONFIRMED] > 0


def test_scans_independent_of_workers():
    a = exhaustive_scan("L5.1", n_values=[6], workers=1)
    b = exhaustive_scan("L5.1", n_values=[6], workers=3)
    assert scan_text(a) == scan_text(b)
    base = hilton_milner(8, 3)
    a = subfamily_scan("T2.5", Hypergraph(8, 3, base.edges[:12]), workers=1)
    b = subfamily_scan("T2.5", Hypergraph(8, 3, base.edges[:12]), workers=3)
    assert scan_text(a) == scan_text(b)


def test_coloring_scan():
    pm = perfect_matching(12, 3)
    rep = exhaustive_scan("COR5", base=pm, sizes=[2, 2])
    assert rep.violation_count == 0 and dict(rep.extra)["colorings"] == 16
    with pytest.raises(ValueError):
        exhaustive_scan("COR5", base=one_star(9, 3), sizes=[2, 2])
    with pytest.raises(ValueError):
        subfamily_scan("T2.5", one_star(9, 3))


# hunts ----------------------------------------------------------------------------


def test_hunt_deterministic_and_worker_independent():
    a = hunt("C8.1", [9, 10], 3, seed=3, budget=600, s=2)
    b = hunt("C8.1", [9, 10], 3, seed=3, budget=600, s=2)
    c = hunt("C8.1", [9, 10], 3, seed=3, budget=600, workers=2, s=2)
    assert hunt_text(a) == hunt_text(b) == hunt_text(c)
    assert hunt_kv(a) == hunt_kv(c)
    assert [run.steps for run in a.runs] == [300, 300]


def test_hunt_budget_split_and_seed_sensitivity():
    rep = hunt("L2.2", [6, 7, 8], 2, seed=1, budget=10)
    assert [run.steps for run in rep.runs] == [4, 3, 3]
    other = hunt("L2.2", [6, 7, 8], 2, seed=2, budget=10)
    assert hunt_text(rep) != hunt_text(other)


def test_hunt_proven_entry_finds_nothing():
    rep = hunt("T1.4", [8], 3, seed=1, budget=3000)
    assert rep.violation_count == 0 and rep.status is Status.CONFIRMED


def test_hunt_trace_is_monotone():
    rep = hunt("C8.1", [10], 3, seed=5, budget=1500, s=3)
    trace = rep.runs[0].trace
    keys = [(d, m) for _, d, m in trace]
    assert keys == sorted(keys, reverse=True)
    assert rep.runs[0].best == keys[-1]


def test_hunt_repair_keeps_families_intersecting():
    rep = hunt("T2.9", [8], 3, seed=4, budget=800, t=2)
    H = Hypergraph(8, 3, rep.runs[0].best_edges)
    assert all(bin(a & b).count("1") >= 2 for a, b in combinations(H.edges, 2))


def test_hunt_finds_known_violation():
    # without the triangle exception the third-family cap fails for r = 3
    rep = hunt("T2.7", [8], 3, seed=2, budget=5000, triangle_exception=False)
    assert rep.violation_count > 0
    for edges in rep.runs[0].violations:
        v = check("T2.7", Hypergraph(8, 3, edges), triangle_exception=False)
        assert v.status is Status.VIOLATION


def test_hunt_rejections():
    with pytest.raises(ValueError):
        hunt("T1.9", [8], 3, seed=1, budget=10)
    with pytest.raises(ValueError):
        hunt("COR5", [8], 3, seed=1, budget=10, sizes=[2])
    with pytest.raises(ValueError):
        hunt("T1.4", [31], 3, seed=1, budget=10)


# averaging ------------------------------------------------------------------------


def test_averaging_star_example():
    H = one_star(10, 3)
    X = vset(range(4, 11))
    bound = averaging_lower_bound(H, X)
    assert bound == math.comb(7, 3) * 24 // math.comb(6, 2) == 56
    assert sum(H.degrees[v - 1] for v in members(X)) >= bound


def test_averaging_single_nonedge_and_isolated():
    H = build(6, 3, [[1, 2, 3], [1, 2, 4]])
    X = vset([4, 5, 6])
    assert averaging_lower_bound(H, X) == ore_degree(H).value
    assert averaging_lower_bound(H, vset([3, 5, 6])) == 1
    # an isolated r-set forces the bound (and sigma) to zero
    assert averaging_lower_bound(build(8, 3, [[1, 2, 3]]), vset([4, 5, 6, 7])) == 0
    with pytest.raises(ValueError):
        averaging_lower_bound(H, vset([1, 2, 3, 5]))
    with pytest.raises(ValueError):
        averaging_lower_bound(H, vset([5, 6]))


@pytest.mark.parametrize("n,r", [(7, 2), (8, 3), (9, 3), (10, 4)])
def test_averaging_random(n, r):
    rng = np.random.default_rng(n * 31 + r)
    done = 0
    while done < 100:
        H = random_hypergraph(rng, n, r, p=rng.uniform(0.05, 0.6))
        k = int(rng.integers(r, n + 1))
        X = vset(int(v) for v in rng.choice(np.arange(1, n + 1), size=k, replace=False))
        if any(e & X == e for e in H.edges):
            continue
        bound = averaging_lower_bound(H, X)
        sigma, _ = brute_sigma(n, r, tuples(H))
        assert bound == math.comb(k, r) * sigma // math.comb(k - 1, r - 1)
        done += 1


# reports ---------------------------------------------------------------------------


def test_verdict_reports():
    v = check("T2.7", triangle_family(9), triangle_exception=False)
    text = verdict_text(v, triangle_family(9))
    assert "status: VIOLATION" in text and "witness: instance 0" in text and text.endswith("end\n")
    kv = verdict_kv(v)
    assert all("=" in line for line in kv.splitlines())
    assert f"digest={digest(triangle_family(9))}" in kv

"""Hypothesis/conclusion predicates for every statement the toolkit checks.

Single-hypergraph entries are written as a *margin* function returning
``(deficit, slack)`` over a :class:`View`:

* ``deficit >= 0`` measures how far the hypothesis is from holding; it is
  zero exactly when the hypothesis holds.
* ``slack`` is nonnegative exactly when the conclusion holds.

``check`` derives its verdict from these integers and ``hunt`` anneals on
them, so both always agree.  Pair and colored-list entries have a plain
evaluator instead and are not huntable.
"""

from __future__ import annotations

import enum
import hashlib
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any

from .. import hgf
from ..hypergraph import (
    ColoredHypergraph,
    Hypergraph,
    find_coloring_conflict,
    find_cross_disjoint_pair,
    members,
    popcount,
    vset,
)
from ..matching import (
    arrow_check,
    has_matching,
    max_matching,
    rainbow_matching,
    rooted_matching,
)
from ..setcore import Bound, binom, eval_bound, regular_cap_ratio
from .view import View


class Arity(enum.Enum):
    SINGLE = "single"
    PAIR = "pair"
    COLORED = "colored"


class Status(enum.Enum):
    CONFIRMED = "CONFIRMED"
    VACUOUS = "VACUOUS"
    VIOLATION = "VIOLATION"


# coloring count above which COR5 refuses to quantify over all colorings
COLORING_CAP = 1 << 20


@dataclass(frozen=True)
class Entry:
    id: str
    summary: str
    arity: Arity
    params: tuple[str, ...]
    domain: Callable[..., bool]
    margins: Callable[[View, dict], tuple[int, int]] | None = None
    evaluate: Callable[..., tuple[bool, bool, dict]] | None = None
    conjecture: bool = False
    # pairwise intersection every hunted family is repaired to satisfy
    conflict: Callable[[dict], int | None] = lambda p: None
    # restricts the hunt's candidate edges (mask -> bool), given (n, r, params)
    pool: Callable[..., Callable[[int], bool] | None] = lambda n, r, p: None
    huntable: bool = True
    defaults: Callable[[int, int, dict], dict] = lambda n, r, p: {}


@dataclass(frozen=True)
class TheoremVerdict:
    entry: str
    digest: str
    hypothesis_holds: bool
    conclusion_holds: bool
    status: Status
    in_domain: bool
    conjecture: bool
    params: dict[str, Any] = field(default_factory=dict)
    witness: dict[str, str] = field(default_factory=dict)

    @property
    def out_of_domain(self) -> bool:
        return not self.in_domain


def _ind(ok: bool) -> int:
    return 0 if ok else 1


def _fmt_edges(edges) -> str:
    return " | ".join(" ".join(map(str, members(e))) for e in edges) if edges else "-"


def _sigma_slack(view: View, bound: int) -> int:
    """bound - sigma, with Unbounded counted as exceeding any bound."""
    return -1 if view.sigma is None else bound - view.sigma


def _sigma_gap(view: View, bound: int) -> int:
    """Deficit of the hypothesis sigma > bound."""
    return 0 if view.sigma_above(bound) else bound + 1 - view.sigma


def _nu_slack(view: View, s: int) -> int:
    """Sign of nu - s, refined by |H| so annealing drifts toward sparse,
    near-extremal families: (nu - s)(C(n,r) + 1) + |H| < 0 iff nu < s."""
    return (view.nu - s) * (binom(view.n, view.r) + 1) + view.m


# ---------------------------------------------------------------------------
# single-hypergraph margins


def _m_min_degree_star(v: View, p):
    target = binom(v.n - 2, v.r - 2)
    deficit = int(sum(max(0, target - int(d)) for d in v.deg))
    return deficit, 0 if (not v.intersecting or v.full_star) else -1


def _m_conjectured_edge(v: View, p):
    s = p["s"]
    return max(0, eval_bound(Bound.ERDOS_EDGE, v.n, v.r, s=s) + 1 - v.m), _nu_slack(v, s)


def _m_matching_edge(v: View, p):
    s = p["s"]
    return max(0, eval_bound(Bound.MATCH_EDGE, v.n, v.r, s=s) + 1 - v.m), _nu_slack(v, s)


def _m_ekr_ore(v: View, p):
    b = eval_bound(Bound.EKR_ORE, v.n, v.r)
    slack = _sigma_slack(v, b)
    if slack == 0 and not v.full_star:
        slack = -1
    return _ind(v.intersecting), slack


def _m_hm_ore(v: View, p):
    b = eval_bound(Bound.HM_ORE, v.n, v.r)
    return _ind(v.intersecting) + _ind(not v.trivial), _sigma_slack(v, b)


def _m_match_ore(v: View, p):
    s = p["s"]
    b = eval_bound(Bound.MATCH_ORE, v.n, v.r, s=s)
    return _sigma_gap(v, b), _nu_slack(v, s)


def _m_ore_size(v: View, p):
    if v.complete:
        return 1, 0
    r, n = v.r, v.n
    slack = r * r * v.m - n * v.sigma
    if slack == 0 and v.regular is None:
        slack = -1
    return 0, slack


def _m_regular_cap(v: View, p):
    head, den = regular_cap_ratio(v.n, v.r)
    deficit = _ind(v.intersecting) + (v.max_degree - v.min_degree)
    slack = binom(v.n, v.r) if den == 0 else head * binom(v.n, v.r) - v.m * den
    return deficit, slack


def _m_regular_degree(v: View, p):
    target = binom(v.n - 2, v.r - 2)
    deficit = _ind(v.intersecting) + (v.max_degree - v.min_degree)
    return deficit, abs(v.max_degree - target) + abs(v.min_degree - target) - 1


def _m_hm_size(v: View, p):
    deficit = _ind(v.intersecting) + _ind(not v.trivial)
    return deficit, eval_bound(Bound.HM_SIZE, v.n, v.r) - v.m


def _m_maxdeg(v: View, p):
    i = p["i"]
    deficit = _ind(v.intersecting) + max(0, v.max_degree - eval_bound(Bound.MAXDEG_HYP, v.n, v.r, i=i))
    return deficit, eval_bound(Bound.MAXDEG_CAP, v.n, v.r, i=i) - v.m


def _m_third_family(v: View, p):
    deficit = _ind(v.intersecting) + _ind(not v.trivial) + _ind(v.hm is None)
    if v.r == 3 and p.get("triangle_exception", True):
        deficit += _ind(v.triangle_core is None)
    return deficit, eval_bound(Bound.THIRD_FAMILY_CAP, v.n, v.r) - v.m


def _transversals(p) -> list[int]:
    return [vset(T) if not isinstance(T, int) else T for T in p["T"]]


def _m_three_transversal(v: View, p):
    Ts = _transversals(p)
    misses = sum(1 for e in v.hypergraph.edges if not all(e & T for T in Ts)) if v.m else 0
    cap = eval_bound(Bound.THREE_TRANSVERSAL_CAP, v.n, v.r, ell=p["ell"])
    return _ind(v.intersecting) + misses, cap - v.m


def _m_t_intersecting(v: View, p):
    t = p["t"]
    return _ind(v.t_intersecting(t)), eval_bound(Bound.WILSON_CAP, v.n, v.r, t=t) - v.m


def _m_rooted(v: View, p):
    roots = list(p["roots"])
    b = eval_bound(Bound.ROOTED_DEG, v.n, v.r, s=len(roots))
    deficit = sum(max(0, b + 1 - int(v.deg[x - 1])) for x in roots)
    return deficit, 0 if rooted_matching(v.hypergraph, roots) is not None else -1


def _m_arrow(v: View, p):
    sizes = p["sizes"]
    N = sum(k - 1 for k in sizes)
    b = eval_bound(Bound.MATCH_ORE, v.n, v.r, s=N + 1)
    coloring = p.get("coloring")
    if coloring is not None:
        return _sigma_gap(v, b), 0 if arrow_check(v.hypergraph, coloring, sizes).holds else -1
    total = coloring_count(v.m, len(sizes))
    bad = coloring_scan(v.hypergraph, sizes, 0, total)
    if bad is not None:
        p["_bad_coloring"] = bad
    return _sigma_gap(v, b), 0 if bad is None else -1


def coloring_count(m: int, c: int) -> int:
    total = c ** m
    if total > COLORING_CAP:
        raise ValueError(f"{c}^{m} colorings exceed the cap {COLORING_CAP}; supply a coloring")
    return total


def decode_coloring(code: int, m: int, c: int) -> tuple[int, ...]:
    """Coloring number ``code`` in base c, first edge most significant."""
    out = []
    for _ in range(m):
        code, d = divmod(code, c)
        out.append(d + 1)
    return tuple(reversed(out))


def coloring_scan(H: Hypergraph, sizes: Sequence[int], start: int, stop: int) -> tuple[int, ...] | None:
    """First coloring in [start, stop) with no color class i holding a
    matching of size sizes[i], or None.  Class verdicts are memoized by
    edge subset."""
    c, m = len(sizes), len(H)
    memo: dict[tuple[int, int], bool] = {}
    for code in range(start, stop):
        col = decode_coloring(code, m, c)
        ok = False
        for k in range(c):
            sub = 0
            for j, x in enumerate(col):
                if x == k + 1:
                    sub |= 1 << j
            key = (k, sub)
            if key not in memo:
                edges = [H.edges[j] for j in range(m) if sub >> j & 1]
                memo[key] = has_matching(Hypergraph(H.n, H.r, edges), sizes[k]) is not None
            if memo[key]:
                ok = True
                break
        if not ok:
            return col
    return None


# ---------------------------------------------------------------------------
# pair / colored evaluators, returning (hyp, concl, witness)


def _e_monotone(pair, p):
    sub, sup = pair
    hyp = sub.n == sup.n and sub.r == sup.r and sub.edge_set <= sup.edge_set
    a, b = View.of(sub).sigma, View.of(sup).sigma
    concl = b is None or (a is not None and a <= b)
    return hyp, concl, {"sigma": f"{_str_sigma(a)} <= {_str_sigma(b)}"}


def _e_cross_ore(pair, p):
    A, B = pair
    va, vb = View.of(A), View.of(B)
    bad = find_cross_disjoint_pair(A, B)
    wit = {"sigma": f"{_str_sigma(va.sigma)} * {_str_sigma(vb.sigma)}"}
    if bad is not None:
        wit["disjoint"] = _fmt_edges(bad)
    # an unbounded side leaves the product undefined: fail the side condition
    # and flag the instance as outside the validity region
    hyp = bad is None and va.sigma is not None and vb.sigma is not None
    if va.sigma is None or vb.sigma is None:
        p["_out_of_domain"] = True
    cap = eval_bound(Bound.CROSS_ORE_CAP, A.n, A.r)
    concl = va.sigma is not None and vb.sigma is not None and va.sigma * vb.sigma <= cap
    wit["bound"] = str(cap)
    return hyp, concl, wit


def _e_cross_degree(pair, p):
    A, B = pair
    bad = find_cross_disjoint_pair(A, B)
    prod = A.min_degree * B.min_degree
    cap = eval_bound(Bound.CROSS_DEG_CAP, A.n, A.r)
    return bad is None, prod <= cap, {"product": str(prod), "bound": str(cap)}


def _e_cross_nontrivial(pair, p):
    A, B = pair
    bad = find_cross_disjoint_pair(A, B)
    edges = A.edges + B.edges
    common = 0
    if edges:
        common = edges[0]
        for e in edges[1:]:
            common &= e
    hyp = bad is None and bool(edges) and common == 0
    cap = eval_bound(Bound.CROSS_NONTRIV_CAP, A.n, A.r)
    prod = len(A) * len(B)
    return hyp, prod <= cap, {"product": str(prod), "bound": str(cap)}


def _rainbow_common(fams: Sequence[ColoredHypergraph], hyp: bool, bound_name: str, bound: int):
    for k, C in enumerate(fams):
        bad = find_coloring_conflict(C.base, C.colors)
        if bad is not None:
            raise ValueError(f"family {k} is not properly colored: {_fmt_edges(bad)}")
    picks = rainbow_matching(fams)
    wit = {bound_name: str(bound)}
    if picks is not None:
        wit["rainbow"] = " | ".join(
            f"{' '.join(map(str, members(pk.edge)))} c{pk.color}" for pk in picks)
    return hyp, picks is not None, wit


def _e_rainbow_ore(fams, p):
    C0 = fams[0]
    b = eval_bound(Bound.MATCH_ORE, C0.n, C0.r, s=len(fams))
    hyp = all(View.of(C.base).sigma_above(b) for C in fams)
    return _rainbow_common(fams, hyp, "bound", b)


def _e_rainbow_edge(fams, p):
    C0 = fams[0]
    s = len(fams)
    b = binom(C0.n, C0.r) - binom(C0.n - s + 1, C0.r)
    hyp = all(len(C) > b for C in fams)
    return _rainbow_common(fams, hyp, "bound", b)


def _str_sigma(x) -> str:
    return "unbounded" if x is None else str(x)


# ---------------------------------------------------------------------------
# registry table


def _meets_all(p):
    Ts = _transversals(p)
    return lambda e: all(e & T for T in Ts)


def _default_transversals(n, r, p):
    ell = p.get("ell")
    if ell is None or "T" in p:
        return {}
    return {"T": [vset(range(k * ell + 1, (k + 1) * ell + 1)) for k in range(3)]}


def _default_roots(n, r, p):
    if "roots" in p:
        return {}
    if "s" not in p:
        raise ValueError("entry needs roots or s")
    return {"roots": list(range(1, p["s"] + 1))}


def _transversal_domain(n, r, p):
    ell = p["ell"]
    Ts = _transversals(p)
    disjoint = all(not Ts[a] & Ts[b] for a in range(3) for b in range(a + 1, 3))
    return (r >= 3 and ell >= 4 and n >= r * ell and len(Ts) == 3 and disjoint
            and all(popcount(T) == ell and not T >> n for T in Ts))


def _hm_ore_domain(n, r, p):
    return r >= 3 and (n >= 4 * r * r or (r <= 5 and n >= r * r * (r - 1)))


def _arrow_domain(n, r, p):
    N = sum(k - 1 for k in p["sizes"])
    return n >= 3 * r * r * N


_ALWAYS = lambda n, r, p: True  # noqa: E731

ENTRIES: tuple[Entry, ...] = (
    Entry("T1.2", "min degree >= C(n-2,r-2) forces a full 1-star or two disjoint edges",
          Arity.SINGLE, (), lambda n, r, p: n >= 2 * r + 1,
          margins=_m_min_degree_star, conflict=lambda p: 1),
    Entry("C1.1", "|H| above the matching-conjecture edge bound forces s disjoint edges",
          Arity.SINGLE, ("s",), lambda n, r, p: n >= r * p["s"] - 1,
          margins=_m_conjectured_edge, conjecture=True),
    Entry("T1.3", "|H| > C(n,r) - C(n-s+1,r) forces s disjoint edges",
          Arity.SINGLE, ("s",), lambda n, r, p: n >= (2 * p["s"] - 1) * r - (p["s"] - 1),
          margins=_m_matching_edge),
    Entry("T1.4", "intersecting families have sigma <= r C(n-2,r-2), equality only for a 1-star",
          Arity.SINGLE, (), lambda n, r, p: r >= 3 and n >= 2 * r + 2,
          margins=_m_ekr_ore, conflict=lambda p: 1),
    Entry("T1.5", "non-trivial intersecting families have sigma below the Hilton-Milner value",
          Arity.SINGLE, (), _hm_ore_domain, margins=_m_hm_ore, conflict=lambda p: 1),
    Entry("P4.1", "the Hilton-Milner Ore bound for n >= r^2 (r-1)",
          Arity.SINGLE, (), lambda n, r, p: r >= 2 and n >= r * r * (r - 1),
          margins=_m_hm_ore, conflict=lambda p: 1),
    Entry("T1.6", "sigma above the cover-family value forces s disjoint edges",
          Arity.SINGLE, ("s",), lambda n, r, p: p["s"] >= 2 and n >= 3 * r * r * (p["s"] - 1),
          margins=_m_match_ore),
    Entry("T1.7", "each sigma(H_i) above the cover-family value gives an s-rainbow matching",
          Arity.COLORED, (), lambda n, r, p: r >= 3 and n > 3 * r * r * p["s"],
          evaluate=_e_rainbow_ore, huntable=False),
    Entry("T1.8", "cross-intersecting families have delta(A) delta(B) <= C(n-2,r-2)^2",
          Arity.PAIR, (), lambda n, r, p: n >= 2 * r + 1,
          evaluate=_e_cross_degree, huntable=False),
    Entry("T1.9", "cross-intersecting families have sigma(A) sigma(B) <= r^2 C(n-2,r-2)^2",
          Arity.PAIR, (), lambda n, r, p: n >= 4 * r * r,
          evaluate=_e_cross_ore, huntable=False),
    Entry("RAINBOW_EDGE", "each |H_i| > C(n,r) - C(n-s+1,r) gives an s-rainbow matching",
          Arity.COLORED, (), lambda n, r, p: n >= 3 * r * r * p["s"],
          evaluate=_e_rainbow_edge, huntable=False),
    Entry("OBS", "sigma is monotone under taking subfamilies",
          Arity.PAIR, (), _ALWAYS, evaluate=_e_monotone, huntable=False),
    Entry("L2.2", "r^2 |H| >= n sigma, with equality only for regular H",
          Arity.SINGLE, (), _ALWAYS, margins=_m_ore_size),
    Entry("T2.3", "regular intersecting families obey the regular size cap",
          Arity.SINGLE, (), lambda n, r, p: n >= r, margins=_m_regular_cap, conflict=lambda p: 1),
    Entry("L2.4", "no regular intersecting family has common degree C(n-2,r-2)",
          Arity.SINGLE, (), lambda n, r, p: n >= 2 * r + 1,
          margins=_m_regular_degree, conflict=lambda p: 1),
    Entry("T2.5", "non-trivial intersecting families have at most the Hilton-Milner size",
          Arity.SINGLE, (), lambda n, r, p: r >= 3 and n >= 2 * r,
          margins=_m_hm_size, conflict=lambda p: 1),
    Entry("T2.6", "intersecting families with bounded max degree obey the max-degree cap",
          Arity.SINGLE, ("i",), lambda n, r, p: n > 2 * r and 2 <= p["i"] <= r,
          margins=_m_maxdeg, conflict=lambda p: 1),
    Entry("T2.7", "intersecting families outside stars and Hilton-Milner obey the third cap",
          Arity.SINGLE, (), lambda n, r, p: r >= 3 and n > 2 * r,
          margins=_m_third_family, conflict=lambda p: 1),
    Entry("T2.8", "intersecting families meeting three disjoint l-sets have <= l^2 C(n-3,r-3) edges",
          Arity.SINGLE, ("ell",), _transversal_domain, margins=_m_three_transversal,
          conflict=lambda p: 1, pool=lambda n, r, p: _meets_all(p),
          defaults=_default_transversals),
    Entry("T2.9", "t-intersecting families have at most C(n-t,r-t) edges",
          Arity.SINGLE, ("t",), lambda n, r, p: 1 <= p["t"] <= r and n >= (p["t"] + 1) * (r - p["t"] + 1),
          margins=_m_t_intersecting, conflict=lambda p: p["t"]),
    Entry("L2.10", "s roots of large degree extend to a rooted matching",
          Arity.SINGLE, (), lambda n, r, p: n > r * len(p["roots"]),
          margins=_m_rooted, defaults=_default_roots),
    Entry("T2.11", "cross-intersecting families with empty total intersection obey the product cap",
          Arity.PAIR, (), lambda n, r, p: n >= 2 * r + 1,
          evaluate=_e_cross_nontrivial, huntable=False),
    Entry("L5.1", "graphs with sigma_2 > 2(s-1) and n >= 2s have a matching of size s",
          Arity.SINGLE, ("s",), lambda n, r, p: r == 2 and n >= 2 * p["s"],
          margins=_m_match_ore),
    Entry("COR5", "sigma above the cover value at N+1 forces a monochromatic matching arrow",
          Arity.SINGLE, ("sizes",), _arrow_domain, margins=_m_arrow, huntable=False),
    Entry("C8.1", "sigma above the cover-family value forces s disjoint edges once n > rs",
          Arity.SINGLE, ("s",), lambda n, r, p: n > r * p["s"],
          margins=_m_match_ore, conjecture=True),
)

REGISTRY: dict[str, Entry] = {e.id: e for e in ENTRIES}


def get(entry_id: str) -> Entry:
    try:
        return REGISTRY[entry_id]
    except KeyError:
        raise KeyError(f"unknown registry entry {entry_id!r}; "
                       f"known: {', '.join(REGISTRY)}") from None


# ---------------------------------------------------------------------------


def digest(instance) -> str:
    """Short content hash of the canonical serialization."""
    parts = instance if isinstance(instance, (list, tuple)) else [instance]
    text = "\n".join(hgf.serialize(x) for x in parts)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def resolve_params(entry: Entry, n: int, r: int, params: dict) -> dict:
    p = dict(params)
    p.update(entry.defaults(n, r, p))
    missing = [k for k in entry.params if k not in p]
    if missing:
        raise ValueError(f"{entry.id} needs parameter(s): {', '.join(missing)}")
    for k in ("s", "t", "ell", "i"):
        if k in p and p[k] is not None and p[k] < 1:
            raise ValueError(f"parameter {k} must be positive, got {p[k]}")
    if "sizes" in p:
        sizes = list(p["sizes"])
        if not sizes or min(sizes) < 1 or any(a < b for a, b in zip(sizes, sizes[1:])):
            raise ValueError(f"sizes must be positive and nonincreasing, got {sizes}")
    return p


def _shape(entry: Entry, instance):
    if entry.arity is Arity.SINGLE:
        if not isinstance(instance, Hypergraph):
            raise TypeError(f"{entry.id} takes one Hypergraph")
        return instance.n, instance.r
    if entry.arity is Arity.PAIR:
        if (not isinstance(instance, (tuple, list)) or len(instance) != 2
                or not all(isinstance(x, Hypergraph) for x in instance)):
            raise TypeError(f"{entry.id} takes a pair of Hypergraphs")
        A, B = instance
        if (A.n, A.r) != (B.n, B.r):
            raise ValueError(f"{entry.id}: pair lives on different (n, r)")
        return A.n, A.r
    if (not isinstance(instance, (tuple, list)) or not instance
            or not all(isinstance(x, ColoredHypergraph) for x in instance)):
        raise TypeError(f"{entry.id} takes a nonempty list of ColoredHypergraphs")
    shapes = {(C.n, C.r) for C in instance}
    if len(shapes) != 1:
        raise ValueError(f"{entry.id}: families live on different (n, r)")
    return shapes.pop()


def single_witness(view: View, deficit: int, slack: int) -> dict[str, str]:
    wit = {"deficit": str(deficit), "slack": str(slack), "edges": str(view.m)}
    if "sigma_full" in view.__dict__:
        value, w = view.sigma_full
        wit["sigma"] = _str_sigma(value)
        if w is not None:
            wit["nonedge"] = " ".join(map(str, members(w)))
    if view._nu:
        wit["nu_capped"] = ",".join(f"{k}:{v}" for k, v in sorted(view._nu.items()))
    return wit


def check(entry_id: str, instance, **params) -> TheoremVerdict:
    """Evaluate one registry entry on an instance.

    Instances outside the entry's validity region are still evaluated; the
    verdict carries ``in_domain=False``.
    """
    entry = get(entry_id)
    n, r = _shape(entry, instance)
    if entry.arity is Arity.COLORED:
        params.setdefault("s", len(instance))
    p = resolve_params(entry, n, r, params)
    in_domain = bool(entry.domain(n, r, p))
    if entry.arity is Arity.SINGLE:
        view = View.of(instance)
        deficit, slack = entry.margins(view, p)
        hyp, concl = deficit == 0, slack >= 0
        wit = single_witness(view, deficit, slack)
        if slack < 0 and view._nu:
            wit["max_matching"] = _fmt_edges(max_matching(instance).edges)
        if "_bad_coloring" in p:
            wit["coloring"] = " ".join(map(str, p.pop("_bad_coloring")))
    else:
        hyp, concl, wit = entry.evaluate(instance, p)
        in_domain = in_domain and not p.pop("_out_of_domain", False)
    if not hyp:
        status = Status.VACUOUS
    elif concl:
        status = Status.CONFIRMED
    else:
        status = Status.VIOLATION
    shown = {k: v for k, v in p.items() if not k.startswith("_")}
    return TheoremVerdict(entry.id, digest(instance), hyp, concl, status, in_domain,
                          entry.conjecture, shown, wit)


__all__ = [
    "Arity",
    "COLORING_CAP",
    "ENTRIES",
    "Entry",
    "REGISTRY",
    "Status",
    "TheoremVerdict",
    "check",
    "digest",
    "get",
]

"""Brute-force checks that the named constructions meet their closed forms."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..constructions import Kind, generate
from ..hypergraph import Hypergraph, ore_degree, vset
from ..matching import matching_number
from ..setcore import Bound, eval_bound


@dataclass
class TightnessReport:
    kind: str
    n: int
    r: int
    s: int | None
    rows: list[tuple[str, object, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(got == want for _, got, want in self.rows)


def _sigma(H: Hypergraph):
    o = ore_degree(H)
    return "unbounded" if o.unbounded else o.value


def verify_tightness(kind: Kind | str, n: int, r: int, s: int | None = None,
                     t: int | None = None) -> TightnessReport:
    """Generate the construction and compare brute-force values to the bounds.

    star: sigma = r C(n-2,r-2).  hm: sigma and |H| at the Hilton-Milner
    values.  cover (|T| = s-1) and clique (|W| = rs-1): nu = s-1, with the
    cover's sigma at the matching threshold.  fano: size equals the regular
    intersecting cap.  pm: r^2 |H| = n sigma.  tstar: size C(n-t,r-t).
    """
    kind = Kind(kind)
    if kind is Kind.FANO:
        n, r = 7, 3
    rep = TightnessReport(kind.value, n, r, s)
    rows = rep.rows
    if kind is Kind.ONE_STAR:
        H = generate(kind, n, r)
        rows.append(("sigma", _sigma(H), eval_bound(Bound.EKR_ORE, n, r)))
    elif kind is Kind.HILTON_MILNER:
        H = generate(kind, n, r)
        rows.append(("sigma", _sigma(H), eval_bound(Bound.HM_ORE, n, r)))
        rows.append(("edges", len(H), eval_bound(Bound.HM_SIZE, n, r)))
    elif kind in (Kind.COVER, Kind.CLIQUE):
        if s is None or s < 2:
            raise ValueError(f"{kind.value} tightness needs s >= 2")
        if kind is Kind.COVER:
            H = generate(kind, n, r, T=vset(range(1, s)))
            rows.append(("sigma", _sigma(H), eval_bound(Bound.MATCH_ORE, n, r, s=s)))
            rows.append(("edges", len(H), eval_bound(Bound.COVER_SIZE, n, r, s=s)))
        else:
            if r * s - 1 > n:
                raise ValueError(f"clique needs rs - 1 <= n, got {r * s - 1} > {n}")
            H = generate(kind, n, r, W=vset(range(1, r * s)))
            rows.append(("edges", len(H), eval_bound(Bound.CLIQUE_SIZE, n, r, s=s)))
        rows.append(("nu", matching_number(H), s - 1))
    elif kind is Kind.FANO:
        H = generate(kind)
        rows.append(("edges", len(H), eval_bound(Bound.REGULAR_CAP, 7, 3)))
        rows.append(("regular", H.min_degree == H.max_degree, True))
    elif kind is Kind.PERFECT_MATCHING:
        H = generate(kind, n, r)
        o = ore_degree(H)
        rows.append(("r2_edges", r * r * len(H), "unbounded" if o.unbounded else n * o.value))
    elif kind is Kind.T_STAR:
        t = t or 1
        H = generate(kind, n, r, t=t)
        rows.append(("edges", len(H), eval_bound(Bound.WILSON_CAP, n, r, t=t)))
    return rep


# which construction shows each bound is attained
ENTRY_KINDS = {
    "T1.4": Kind.ONE_STAR,
    "T1.9": Kind.ONE_STAR,
    "T1.5": Kind.HILTON_MILNER,
    "P4.1": Kind.HILTON_MILNER,
    "T2.5": Kind.HILTON_MILNER,
    "T1.3": Kind.COVER,
    "T1.6": Kind.COVER,
    "L5.1": Kind.COVER,
    "C8.1": Kind.COVER,
    "C1.1": Kind.CLIQUE,
    "T2.3": Kind.FANO,
    "L2.2": Kind.PERFECT_MATCHING,
    "T2.9": Kind.T_STAR,
}

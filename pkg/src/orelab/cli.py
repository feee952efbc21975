"""orelab command line: gen, analyze, verify, hunt.

Exit codes: 0 success / no violation, 1 usage or input error, 2 a
VIOLATION was found.
"""

from __future__ import annotations

import argparse
import sys

from . import hgf
from .constructions import Kind, generate
from .hypergraph import (
    ColoredHypergraph,
    Hypergraph,
    find_coloring_conflict,
    find_disjoint_pair,
    is_hm_subfamily,
    is_regular,
    is_trivial_star,
    members,
    min_pairwise_intersection,
    ore_degree,
    vset,
)
from .matching import max_matching
from .verify import report
from .verify.registry import Arity, Status, check, get
from .verify.scan import exhaustive_scan
from .verify.tightness import ENTRY_KINDS, verify_tightness

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def int_list(text: str) -> list[int]:
    """'1,2,3' -> [1, 2, 3]."""
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def int_range(text: str) -> list[int]:
    """'12..20' (inclusive), '7', or '4,6,9'."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split(".."))
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
        return int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 12..20, got {text!r}") from None


def set_groups(text: str) -> list[list[int]]:
    """'1,2,3,4/5,6,7,8/9,10,11,12' -> three vertex lists."""
    return [int_list(part) for part in text.split("/")]


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# gen -------------------------------------------------------------------------


def cmd_gen(args) -> int:
    H = generate(Kind(args.kind), args.n, args.r, x=args.x,
                 S=args.S, T=args.T, W=args.W, t=args.t)
    _emit(hgf.serialize(H), args.output)
    return EXIT_OK


# analyze ---------------------------------------------------------------------


def _verts(mask: int) -> str:
    return " ".join(map(str, members(mask)))


def analyze_text(H: Hypergraph | ColoredHypergraph) -> str:
    lines = []
    if isinstance(H, ColoredHypergraph):
        conflict = find_coloring_conflict(H.base, H.colors)
        lines.append(f"colors: {len(set(H.colors))} of {H.palette}")
        lines.append("proper-coloring: " + ("yes" if conflict is None else
                                            f"no ({_verts(conflict[0])} / {_verts(conflict[1])})"))
        H = H.base
    m = len(H)
    na = m == 0
    lines = [f"n: {H.n}", f"r: {H.r}", f"edges: {m}",
             f"min-degree: {H.min_degree}", f"max-degree: {H.max_degree}"] + lines
    o = ore_degree(H)
    lines.append(f"sigma: {o}")
    lines.append(f"sigma-witness: {_verts(o.witness) if o.witness is not None else '-'}")
    M = max_matching(H)
    lines.append(f"nu: {M.size}")
    lines.append("matching: " + (" | ".join(_verts(e) for e in M.edges) or "-"))
    if na:
        lines += ["intersecting: n/a", "t-intersecting: n/a", "trivial-star: n/a",
                  "hm-subfamily: n/a", "regular: n/a"]
        return "\n".join(lines) + "\n"
    pair = find_disjoint_pair(H)
    lines.append("intersecting: " + ("yes" if pair is None else
                                     f"no ({_verts(pair[0])} / {_verts(pair[1])})"))
    lines.append(f"t-intersecting: {min_pairwise_intersection(H)}" if m >= 2 else "t-intersecting: n/a")
    center = is_trivial_star(H)
    lines.append(f"trivial-star: center {center}" if center is not None else "trivial-star: no")
    hm = is_hm_subfamily(H)
    lines.append(f"hm-subfamily: x={hm[0]} S={_verts(hm[1])}" if hm else "hm-subfamily: no")
    d = is_regular(H)
    lines.append(f"regular: {d}" if d is not None else "regular: no")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    _emit(analyze_text(hgf.read(args.input)), args.output)
    return EXIT_OK


# verify ----------------------------------------------------------------------


def _entry_params(args) -> dict:
    p = {}
    for key in ("s", "t", "i", "ell"):
        if getattr(args, key, None) is not None:
            p[key] = getattr(args, key)
    if getattr(args, "roots", None):
        p["roots"] = args.roots
    if getattr(args, "sizes", None):
        p["sizes"] = args.sizes
    if getattr(args, "transversals", None):
        p["T"] = [vset(g) for g in args.transversals]
    if getattr(args, "no_triangle_exception", False):
        p["triangle_exception"] = False
    return p


def _verify_instance(args, params) -> tuple[str, Status]:
    entry = get(args.entry)
    loaded = [hgf.read(path) for path in args.files]
    if entry.arity is Arity.SINGLE:
        if len(loaded) != 1:
            raise UsageError(f"{entry.id} takes one instance file")
        inst = loaded[0]
        if isinstance(inst, ColoredHypergraph):
            if entry.id == "COR5" and "coloring" not in params:
                params["coloring"] = list(inst.colors)
            inst = inst.base
    elif entry.arity is Arity.PAIR:
        if len(loaded) != 2:
            raise UsageError(f"{entry.id} takes two instance files")
        inst = tuple(x.base if isinstance(x, ColoredHypergraph) else x for x in loaded)
    else:
        if not loaded or not all(isinstance(x, ColoredHypergraph) for x in loaded):
            raise UsageError(f"{entry.id} takes one or more colored instance files")
        inst = loaded
    verdict = check(entry.id, inst, **params)
    text = report.verdict_kv(verdict) if args.format == "kv" else report.verdict_text(verdict, inst)
    return text, verdict.status


def cmd_verify(args) -> int:
    params = _entry_params(args)
    if args.tightness:
        kind = ENTRY_KINDS.get(args.entry)
        if kind is None:
            raise UsageError(f"no tightness construction registered for {args.entry}")
        if kind is not Kind.FANO and (args.n is None or args.r is None):
            raise UsageError("--tightness needs --n and --r")
        n = args.n[0] if args.n else 7
        rep = verify_tightness(kind, n, args.r or 3, s=args.s, t=args.t)
        text = report.tightness_kv(rep) if args.format == "kv" else report.tightness_text(rep)
        _emit(text, args.output)
        return EXIT_OK if rep.ok else EXIT_VIOLATION
    if args.exhaustive:
        base = None
        if args.files:
            if len(args.files) != 1:
                raise UsageError("--exhaustive takes at most one base family file")
            base = hgf.read(args.files[0])
            if isinstance(base, ColoredHypergraph):
                base = base.base
        elif args.n is None:
            raise UsageError("--exhaustive needs --n or a base family file")
        s_values = None
        if base is None and "s" in params:
            s_values = [params.pop("s")]
        sizes = params.pop("sizes", None)
        rep = exhaustive_scan(args.entry, n_values=args.n, s_values=s_values, base=base,
                              sizes=sizes, workers=args.workers, **params)
        text = report.scan_kv(rep) if args.format == "kv" else report.scan_text(rep)
        _emit(text, args.output)
        return EXIT_VIOLATION if rep.violation_count else EXIT_OK
    if not args.files:
        raise UsageError("verify needs instance files, --tightness or --exhaustive")
    text, status = _verify_instance(args, params)
    _emit(text, args.output)
    return EXIT_VIOLATION if status is Status.VIOLATION else EXIT_OK


# hunt ------------------------------------------------------------------------


def cmd_hunt(args) -> int:
    from .verify.hunt import hunt

    rep = hunt(args.entry, args.n, args.r, args.seed, args.budget,
               workers=args.workers, **_entry_params(args))
    text = report.hunt_kv(rep) if args.format == "kv" else report.hunt_text(rep)
    _emit(text, args.output)
    return EXIT_VIOLATION if rep.violation_count else EXIT_OK


# -----------------------------------------------------------------------------


def _add_entry_params(p) -> None:
    p.add_argument("--s", type=int, help="matching size")
    p.add_argument("--t", type=int, help="intersection size")
    p.add_argument("--i", type=int, help="max-degree parameter, 2 <= i <= r")
    p.add_argument("--ell", type=int, help="transversal set size")
    p.add_argument("--transversals", type=set_groups, metavar="A/B/C",
                   help="three vertex lists, e.g. 1,2,3,4/5,6,7,8/9,10,11,12")
    p.add_argument("--roots", type=int_list, help="root vertices for rooted matchings")
    p.add_argument("--sizes", type=int_list, help="nonincreasing matching sizes n_1,...,n_c")
    p.add_argument("--no-triangle-exception", action="store_true",
                   help="check the third-family cap without the r = 3 triangle exception")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orelab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="emit a named construction in hgf format")
    g.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    g.add_argument("--n", type=int)
    g.add_argument("--r", type=int)
    g.add_argument("--x", type=int, default=1, help="center vertex")
    g.add_argument("--S", type=int_list, help="base edge for hm")
    g.add_argument("--T", type=int_list, help="cover set, or the fixed set for tstar")
    g.add_argument("--W", type=int_list, help="clique support")
    g.add_argument("--t", type=int, help="tstar: fix {1..t} when --T is absent")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="degrees, Ore-degree, matching number and flags")
    a.add_argument("input", help="hgf file, or - for standard input")
    a.add_argument("-o", "--output")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="check a registry entry")
    v.add_argument("entry")
    v.add_argument("files", nargs="*", help="instance file(s); - reads standard input")
    v.add_argument("--tightness", action="store_true")
    v.add_argument("--exhaustive", action="store_true")
    v.add_argument("--n", type=int_range, help="n, or a range such as 2..6")
    v.add_argument("--r", type=int)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--format", choices=["text", "kv"], default="text")
    v.add_argument("-o", "--output")
    _add_entry_params(v)
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("hunt", help="seeded annealing search for counterexamples")
    h.add_argument("entry")
    h.add_argument("--r", type=int, required=True)
    h.add_argument("--n", type=int_range, required=True, help="n or a range such as 12..20")
    h.add_argument("--seed", type=int, required=True)
    h.add_argument("--budget", type=int, default=100000, help="annealing steps in total")
    h.add_argument("--workers", type=int, default=1)
    h.add_argument("--format", choices=["text", "kv"], default="text")
    h.add_argument("-o", "--output")
    _add_entry_params(h)
    h.set_defaults(func=cmd_hunt)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, TypeError, OverflowError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"orelab {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

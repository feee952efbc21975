"""Text and flat key-value renderings of verdicts, scans and hunts.

Text reports open with ``key: value`` header lines and end with witness
blocks in hgf format, each introduced by a ``witness:`` line and closed by
``end``.  The key-value variant has one ``key=value`` datum per line.
Neither contains timestamps or host data, so equal inputs give equal bytes.
"""

from __future__ import annotations

from .. import hgf
from ..hypergraph import Hypergraph, members, vset
from .registry import Status, TheoremVerdict


def _value(key: str, v) -> str:
    if key == "T":
        # transversal sets are vertex masks
        return "/".join(",".join(map(str, members(x if isinstance(x, int) else vset(x)))) for x in v)
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    return str(v)


def _params(params: dict) -> str:
    if not params:
        return "-"
    return " ".join(f"{k}={_value(k, params[k])}" for k in sorted(params))


def _edges_kv(edges) -> str:
    return ";".join("-".join(map(str, members(e))) for e in edges)


def _block(label: str, H) -> list[str]:
    return [f"witness: {label}", hgf.serialize(H).rstrip("\n"), "end"]


def _render(header: list[tuple[str, object]], blocks: list[list[str]] = ()) -> str:
    lines = [f"{k}: {v}" for k, v in header]
    for b in blocks:
        lines.extend(b)
    return "\n".join(lines) + "\n"


def _kv(pairs: list[tuple[str, object]]) -> str:
    return "".join(f"{k}={v}\n" for k, v in pairs)


# ---------------------------------------------------------------------------


def verdict_text(v: TheoremVerdict, instance=None) -> str:
    header = [
        ("report", "check"),
        ("entry", v.entry),
        ("params", _params(v.params)),
        ("digest", v.digest),
        ("hypothesis", "holds" if v.hypothesis_holds else "fails"),
        ("conclusion", "holds" if v.conclusion_holds else "fails"),
        ("status", v.status.value),
        ("domain", "in" if v.in_domain else "OUT_OF_DOMAIN"),
    ]
    if v.conjecture:
        header.append(("kind", "conjecture"))
    header += sorted(v.witness.items())
    blocks = []
    if v.status is Status.VIOLATION and instance is not None:
        parts = instance if isinstance(instance, (list, tuple)) else [instance]
        blocks = [_block(f"instance {k}", x) for k, x in enumerate(parts)]
    return _render(header, blocks)


def verdict_kv(v: TheoremVerdict) -> str:
    pairs = [("report", "check"), ("entry", v.entry), ("params", _params(v.params)),
             ("digest", v.digest), ("hypothesis_holds", int(v.hypothesis_holds)),
             ("conclusion_holds", int(v.conclusion_holds)), ("status", v.status.value),
             ("in_domain", int(v.in_domain)), ("conjecture", int(v.conjecture))]
    pairs += [(f"witness.{k}", val) for k, val in sorted(v.witness.items())]
    return _kv(pairs)


def scan_text(rep) -> str:
    header = [
        ("report", "scan"),
        ("entry", rep.entry),
        ("params", _params(rep.params)),
        ("space", rep.space),
        ("instances", rep.total),
    ]
    header += [(f"status {s.value}", rep.counts.get(s, 0)) for s in Status]
    header += [("out_of_domain", rep.out_of_domain), ("violations", rep.violation_count)]
    header += [(k, v) for k, v in rep.extra]
    blocks = [_block(f"violation {k}", H) for k, H in enumerate(rep.violations)]
    return _render(header, blocks)


def scan_kv(rep) -> str:
    pairs = [("report", "scan"), ("entry", rep.entry), ("params", _params(rep.params)),
             ("space", rep.space), ("instances", rep.total)]
    pairs += [(f"status.{s.value}", rep.counts.get(s, 0)) for s in Status]
    pairs += [("out_of_domain", rep.out_of_domain), ("violations", rep.violation_count)]
    pairs += list(rep.extra)
    for k, H in enumerate(rep.violations):
        pairs.append((f"violation.{k}.n", H.n))
        pairs.append((f"violation.{k}.edges", _edges_kv(H.edges)))
    return _kv(pairs)


def hunt_text(rep) -> str:
    header = [
        ("report", "hunt"),
        ("entry", rep.entry),
        ("params", _params({"r": rep.r, **rep.params})),
        ("n", ",".join(map(str, rep.n_values))),
        ("seed", rep.seed),
        ("budget", rep.budget),
        ("runs", len(rep.runs)),
        ("violations", rep.violation_count),
        ("status", rep.status.value),
    ]
    if rep.conjecture:
        header.append(("kind", "conjecture"))
    blocks = []
    for run in rep.runs:
        trace = " ".join(f"{s}:{d}/{m}" for s, d, m in run.trace)
        blocks.append([
            f"run: n={run.n} steps={run.steps} domain={'in' if run.in_domain else 'OUT_OF_DOMAIN'}"
            f" t0={run.t0!r} best={run.best[0]}/{run.best[1]} violations={run.violation_count}",
            f"trace: {trace}",
        ])
        blocks.append(_block(f"best n={run.n} deficit={run.best[0]} slack={run.best[1]}",
                             Hypergraph(run.n, rep.r, run.best_edges)))
        for k, edges in enumerate(run.violations):
            blocks.append(_block(f"violation n={run.n} #{k}", Hypergraph(run.n, rep.r, edges)))
    return _render(header, blocks)


def hunt_kv(rep) -> str:
    pairs = [("report", "hunt"), ("entry", rep.entry), ("params", _params({"r": rep.r, **rep.params})),
             ("n", ",".join(map(str, rep.n_values))), ("seed", rep.seed), ("budget", rep.budget),
             ("runs", len(rep.runs)), ("violations", rep.violation_count),
             ("status", rep.status.value)]
    for run in rep.runs:
        key = f"run.{run.n}"
        pairs += [(f"{key}.steps", run.steps), (f"{key}.in_domain", int(run.in_domain)),
                  (f"{key}.t0", repr(run.t0)), (f"{key}.best.deficit", run.best[0]),
                  (f"{key}.best.slack", run.best[1]),
                  (f"{key}.best.edges", _edges_kv(run.best_edges)),
                  (f"{key}.trace", " ".join(f"{s}:{d}/{m}" for s, d, m in run.trace)),
                  (f"{key}.violations", run.violation_count)]
        pairs += [(f"{key}.violation.{k}", _edges_kv(e)) for k, e in enumerate(run.violations)]
    return _kv(pairs)


def tightness_text(rep) -> str:
    header = [("report", "tightness"), ("kind", rep.kind), ("n", rep.n), ("r", rep.r)]
    if rep.s is not None:
        header.append(("s", rep.s))
    for name, got, want in rep.rows:
        header.append((name, f"{got} expected {want} {'match' if got == want else 'MISMATCH'}"))
    header.append(("status", "CONFIRMED" if rep.ok else "MISMATCH"))
    return _render(header)


def tightness_kv(rep) -> str:
    pairs = [("report", "tightness"), ("kind", rep.kind), ("n", rep.n), ("r", rep.r)]
    if rep.s is not None:
        pairs.append(("s", rep.s))
    for name, got, want in rep.rows:
        pairs += [(f"{name}.computed", got), (f"{name}.closed_form", want)]
    pairs.append(("status", "CONFIRMED" if rep.ok else "MISMATCH"))
    return _kv(pairs)

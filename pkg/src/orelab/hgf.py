"""The line-oriented ``hgf 1`` hypergraph file format.

::

    hgf 1
    n r m [c]
    v1 v2 ... vr [color]      (m lines)

Blank lines and lines starting with ``#`` are ignored.  Edges are written
in canonical order, so serialize(parse(text)) is a fixed point.
"""

from __future__ import annotations

import sys
from collections.abc import Iterator

from .hypergraph import ColoredHypergraph, Hypergraph, members, vset

MAGIC = "hgf 1"


class HgfError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for k, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield k, line


def _ints(lineno: int, line: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise HgfError(lineno, f"expected integers, got {line!r}") from None


def parse(text: str) -> Hypergraph | ColoredHypergraph:
    """Parse one hypergraph; colored files give a ColoredHypergraph."""
    rows = _lines(text)
    lineno, line = next(rows, (1, ""))
    if line != MAGIC:
        raise HgfError(lineno, f"bad magic {line!r}, expected {MAGIC!r}")
    lineno, line = next(rows, (lineno + 1, ""))
    head = _ints(lineno, line)
    if len(head) not in (3, 4):
        raise HgfError(lineno, "counts line must be 'n r m' or 'n r m c'")
    n, r, m = head[:3]
    c = head[3] if len(head) == 4 else None
    if not 1 <= r <= n or m < 0 or (c is not None and c < 1):
        raise HgfError(lineno, f"invalid counts {head}")
    width = r + (c is not None)
    seen: dict[int, int] = {}
    edges, colors = [], []
    for lineno, line in rows:
        vals = _ints(lineno, line)
        if len(vals) != width:
            raise HgfError(lineno, f"edge line has {len(vals)} fields, expected {width}")
        verts = vals[:r]
        if any(a >= b for a, b in zip(verts, verts[1:])):
            raise HgfError(lineno, f"vertices not strictly increasing: {verts}")
        if verts and (verts[0] < 1 or verts[-1] > n):
            raise HgfError(lineno, f"vertex outside [1, {n}]: {verts}")
        if c is not None and not 1 <= vals[-1] <= c:
            raise HgfError(lineno, f"color {vals[-1]} outside [1, {c}]")
        e = vset(verts)
        if e in seen:
            raise HgfError(lineno, f"duplicate edge {verts} (first on line {seen[e]})")
        seen[e] = lineno
        edges.append(e)
        if c is not None:
            colors.append(vals[-1])
    if len(edges) != m:
        raise HgfError(lineno + 1, f"expected {m} edges, found {len(edges)}")
    H = Hypergraph(n, r, edges)
    if c is None:
        return H
    by_edge = dict(zip(edges, colors))
    # properness is not a file-level property; arrow checks take any coloring
    return ColoredHypergraph(H, [by_edge[e] for e in H.edges], validate=False, palette=c)


def serialize(H: Hypergraph | ColoredHypergraph) -> str:
    """Canonical text of a plain or colored hypergraph (r >= 1)."""
    if H.r < 1:
        raise ValueError("hgf cannot represent r = 0 (an empty edge is a blank line)")
    if isinstance(H, ColoredHypergraph):
        out = [MAGIC, f"{H.n} {H.r} {len(H)} {H.palette}"]
        out += [" ".join(map(str, members(e) + (col,))) for e, col in zip(H.base.edges, H.colors)]
    else:
        out = [MAGIC, f"{H.n} {H.r} {len(H)}"]
        out += [" ".join(map(str, members(e))) for e in H.edges]
    return "\n".join(out) + "\n"


def read(path: str):
    """Parse from a file path, or standard input when ``path`` is ``-``."""
    if path == "-":
        return parse(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())

from __future__ import annotations

import numpy as np
import pytest

from orelab import hgf
from orelab.constructions import fano
from orelab.hypergraph import ColoredHypergraph, Hypergraph

from conftest import random_hypergraph


def test_roundtrip_fixed_point(rng):
    for _ in range(1000):
        n = int(rng.integers(1, 13))
        r = int(rng.integers(1, n + 1))
        H = random_hypergraph(rng, n, r)
        if rng.random() < 0.3:
            c = int(rng.integers(1, 5))
            H = ColoredHypergraph(H, [int(x) for x in rng.integers(1, c + 1, size=len(H))],
                                  validate=False, palette=c)
        text = hgf.serialize(H)
        back = hgf.parse(text)
        assert back == H
        assert hgf.serialize(back) == text


def test_parse_tolerates_comments_and_order():
    text = "# a comment\nhgf 1\n\n5 2 2\n3 4\n1 2\n"
    H = hgf.parse(text)
    assert H.edges == (0b11, 0b1100)
    assert hgf.serialize(H) == "hgf 1\n5 2 2\n1 2\n3 4\n"


def test_colored_palette_kept():
    C = hgf.parse("hgf 1\n4 2 2 3\n1 2 1\n3 4 1\n")
    assert isinstance(C, ColoredHypergraph) and C.palette == 3 and C.colors == (1, 1)
    assert hgf.serialize(C).splitlines()[1] == "4 2 2 3"


@pytest.mark.parametrize("text,line,needle", [
    ("hgf 2\n3 2 0\n", 1, "magic"),
    ("", 1, "magic"),
    ("hgf 1\n3 2\n", 2, "counts"),
    ("hgf 1\n3 0 0\n", 2, "invalid counts"),
    ("hgf 1\n4 2 1\n2 1\n", 3, "increasing"),
    ("hgf 1\n4 2 1\n1 1\n", 3, "increasing"),
    ("hgf 1\n4 3 1\n1 2\n", 3, "fields"),
    ("hgf 1\n4 2 1\n1 5\n", 3, "outside"),
    ("hgf 1\n4 2 1 2\n1 2 3\n", 3, "color"),
    ("hgf 1\n4 2 2\n1 2\n\n1 2\n", 5, "duplicate"),
    ("hgf 1\n4 2 2\n1 2\n", 4, "expected 2 edges"),
    ("hgf 1\n4 2 1\n1 x\n", 3, "integers"),
])
def test_rejections_carry_line_numbers(text, line, needle):
    with pytest.raises(hgf.HgfError) as info:
        hgf.parse(text)
    assert info.value.lineno == line
    assert str(info.value).startswith(f"line {line}:")
    assert needle in str(info.value)


def test_read_file_and_stdin(tmp_path, monkeypatch):
    import io
    p = tmp_path / "f.hgf"
    p.write_text(hgf.serialize(fano()))
    assert hgf.read(str(p)) == fano()
    monkeypatch.setattr("sys.stdin", io.StringIO(hgf.serialize(fano())))
    assert hgf.read("-") == fano()


def test_empty_family():
    H = hgf.parse("hgf 1\n6 3 0\n")
    assert H == Hypergraph(6, 3)


def test_zero_uniform_not_serializable():
    with pytest.raises(ValueError):
        hgf.serialize(Hypergraph(3, 0, [0]))

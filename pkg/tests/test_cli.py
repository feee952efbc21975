from __future__ import annotations

import subprocess
import sys

import pytest

from orelab import hgf
from orelab.cli import main
from orelab.constructions import fano, one_star


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _file(tmp_path, name, H):
    p = tmp_path / name
    p.write_text(hgf.serialize(H))
    return str(p)


def test_gen_examples(capsys):
    code, out, _ = run(capsys, "gen", "--kind", "star", "--n", "6", "--r", "3", "--x", "1")
    assert code == 0 and len(hgf.parse(out)) == 10
    code, out, _ = run(capsys, "gen", "--kind", "fano")
    H = hgf.parse(out)
    assert code == 0 and (H.n, len(H)) == (7, 7)
    code, out, _ = run(capsys, "gen", "--kind", "cover", "--n", "12", "--r", "3", "--T", "1,2,3")
    assert code == 0 and len(hgf.parse(out)) == 136


def test_gen_errors(capsys):
    code, _, err = run(capsys, "gen", "--kind", "hm", "--n", "5", "--r", "3")
    assert code == 1 and "error" in err
    with pytest.raises(SystemExit) as info:
        main(["gen", "--kind", "nope"])
    assert info.value.code == 1


def test_analyze_examples(tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", _file(tmp_path, "s.hgf", one_star(6, 3)))
    assert code == 0
    lines = out.splitlines()
    for want in ("sigma: 12", "nu: 1", "trivial-star: center 1"):
        assert want in lines
    code, out, _ = run(capsys, "analyze", _file(tmp_path, "f.hgf", fano()))
    for want in ("regular: 3", "intersecting: yes", "nu: 1"):
        assert want in out.splitlines()
    p = tmp_path / "e.hgf"
    p.write_text("hgf 1\n6 3 0\n")
    code, out, _ = run(capsys, "analyze", str(p))
    assert code == 0 and "nu: 0" in out and "intersecting: n/a" in out and "regular: n/a" in out


def test_analyze_parse_error(tmp_path, capsys):
    p = tmp_path / "bad.hgf"
    p.write_text("hgf 1\n4 2 1\n2 1\n")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 1 and "line 3" in err
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.hgf"))
    assert code == 1


def test_analyze_colored(tmp_path, capsys):
    p = tmp_path / "c.hgf"
    p.write_text("hgf 1\n4 2 2 2\n1 2 1\n2 3 1\n")
    code, out, _ = run(capsys, "analyze", str(p))
    assert code == 0 and "proper-coloring: no (1 2 / 2 3)" in out


def test_verify_modes(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "T1.4", "--tightness", "--n", "10", "--r", "3")
    assert code == 0 and "status: CONFIRMED" in out
    code, out, _ = run(capsys, "verify", "L5.1", "--exhaustive", "--n", "6")
    assert code == 0 and "violations: 0" in out
    star = _file(tmp_path, "star.hgf", one_star(8, 3))
    code, out, _ = run(capsys, "verify", "T1.6", star, "--s", "2")
    assert code == 0 and ("VACUOUS" in out or "CONFIRMED" in out)
    code, out, _ = run(capsys, "verify", "T1.4", star, "--format", "kv")
    assert code == 0 and "status=CONFIRMED" in out


def test_verify_violation_exit_code(tmp_path, capsys):
    from orelab.constructions import triangle_family
    f = _file(tmp_path, "tri.hgf", triangle_family(9))
    code, out, _ = run(capsys, "verify", "T2.7", f, "--no-triangle-exception")
    assert code == 2 and "status: VIOLATION" in out and "witness: instance 0" in out
    code, _, _ = run(capsys, "verify", "T2.7", f)
    assert code == 0


def test_verify_usage_errors(tmp_path, capsys):
    star = _file(tmp_path, "star.hgf", one_star(8, 3))
    assert run(capsys, "verify", "T1.4")[0] == 1
    assert run(capsys, "verify", "T1.9", star)[0] == 1
    assert run(capsys, "verify", "NOPE", star)[0] == 1
    assert run(capsys, "verify", "T1.6", star)[0] == 1
    assert run(capsys, "verify", "L5.1", "--exhaustive", "--n", "9")[0] == 1


def test_verify_pair_and_colored(tmp_path, capsys):
    a = _file(tmp_path, "a.hgf", one_star(9, 3))
    code, out, _ = run(capsys, "verify", "T1.8", a, a)
    assert code == 0 and "CONFIRMED" in out
    c = tmp_path / "c.hgf"
    c.write_text("hgf 1\n9 3 3 3\n1 2 3 1\n4 5 6 2\n7 8 9 3\n")
    code, out, _ = run(capsys, "verify", "RAINBOW_EDGE", str(c))
    assert code == 0 and "rainbow" in out


def test_hunt_requires_seed(capsys):
    with pytest.raises(SystemExit) as info:
        main(["hunt", "T1.4", "--r", "3", "--n", "8"])
    assert info.value.code == 1


def test_hunt_deterministic_output(tmp_path, capsys):
    argv = ["hunt", "C8.1", "--r", "3", "--s", "2", "--n", "9..10", "--seed", "1", "--budget", "400"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv, "--workers", "2")
    assert code1 == code2 == 0 and out1 == out2
    assert out1.startswith("report: hunt\n") and "seed: 1" in out1
    o = tmp_path / "h.txt"
    assert run(capsys, *argv, "-o", str(o))[0] == 0
    assert o.read_text() == out1


def test_hunt_violation_exit_code(capsys):
    code, out, _ = run(capsys, "hunt", "T2.7", "--r", "3", "--n", "8", "--seed", "2",
                       "--budget", "5000", "--no-triangle-exception")
    assert code == 2 and "status: VIOLATION" in out


def test_pipeline_through_stdin():
    gen = subprocess.run([sys.executable, "-m", "orelab.cli", "gen", "--kind", "fano"],
                         capture_output=True, text=True, check=True)
    ana = subprocess.run([sys.executable, "-m", "orelab.cli", "analyze", "-"],
                         input=gen.stdout, capture_output=True, text=True)
    assert ana.returncode == 0 and "regular: 3" in ana.stdout

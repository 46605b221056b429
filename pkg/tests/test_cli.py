import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from coxmackey import cli
from coxmackey.repdata import rep_torus, save_spec

SVG = "{http://www.w3.org/2000/svg}"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ---------------------------------------------------------------------------
# info


def test_info_gl2(capsys):
    code, out, _ = run(capsys, "info", "gl2")
    assert code == 0
    assert "cells: 13, flats: 5, |W|: 2, weakly symmetric: false" in out


def test_info_torus_file(capsys, tmp_path):
    path = tmp_path / "t.json"
    save_spec(rep_torus([(1,)]), path)
    code, out, _ = run(capsys, "info", str(path))
    assert code == 0
    assert "cells: 3, flats: 2, |W|: 1" in out


def test_info_cotangent_json(capsys):
    code, out, _ = run(capsys, "info", "T*gl2", "--json")
    data = json.loads(out)
    assert code == 0 and data["weakly_symmetric"] is True and data["cells"] == 13


def test_info_list(capsys):
    code, out, _ = run(capsys, "info", "gl2", "--list")
    assert code == 0 and out.count("span dim") == 13


def test_missing_spec(capsys):
    code, _, err = run(capsys, "info", "no-such-spec.json")
    assert code == 2 and "no such spec" in err


# ---------------------------------------------------------------------------
# query


@pytest.mark.parametrize("argv,expected", [
    (["kernel", "--lambda=-2,-1", "--mu=0,0"], "x1*x2/(x1 - x2)"),
    (["kernel", "--lambda", "-2,-1", "--mu", "0,0"], "x1*x2/(x1 - x2)"),
    (["kernel", "--lambda=1,-1", "--mu=1,0"], "x2"),
    (["braid", "--lambda=-2,-1", "--lambdaprime=-1,-2"], "-1"),
    (["euler", "--lambda=1,0", "--part", "g"], "-x1 + x2"),
    (["induct", "--lambda=1,0", "--poly", "1"], "0"),
    (["restrict", "--lambda=-1,-1", "--poly", "x1 + x2"], "(x1 + x2)/(x1*x2)"),
    (["degree", "--lambda=-1,-1"], "d_F=-2 d_C=-4 d_CF=2 shift=-2"),
])
def test_query(capsys, argv, expected):
    code, out, _ = run(capsys, "query", "gl2", *argv)
    assert code == 0
    assert out.strip() == expected


def test_query_tits(capsys):
    code, out, _ = run(capsys, "query", "gl2", "tits", "--lambda=-1,-2", "--mu=-2,-1")
    assert code == 0 and out.split()[0] == "(-1,-2)"


@pytest.mark.parametrize("argv", [
    ["kernel", "--lambda=1,0", "--mu=1,1"],           # C not below F
    ["kernel", "--lambda=1,0,0"],                      # wrong rank
    ["braid", "--lambda=1,0", "--lambdaprime=1,-1"],  # spans differ
    ["induct", "--lambda=-1,-1", "--poly", "x1"],      # not invariant
    ["induct", "--lambda=1,-1", "--poly", "x1 +"],     # syntax
    ["kernel"],                                        # missing lambda
])
def test_query_usage_errors(capsys, argv):
    code, _, err = run(capsys, "query", "gl2", *argv)
    assert code == 2 and err.startswith("error")


# ---------------------------------------------------------------------------
# mackey


@pytest.mark.parametrize("argv", [
    ["--lambda=-2,-1", "--lambdaprime=-1,-2", "--mu=-1,-1", "--generic"],
    ["--lambda=1,-1", "--lambdaprime=1,-1", "--mu=1,-1", "--random", "3"],
    ["--lambda=1,0", "--lambdaprime=-1,-1", "--mu=0,0", "--generic"],
    ["--lambda=-1,1", "--lambdaprime=1,-1", "--mu=0,0", "--poly", "x1^2*x2 + 3", "-v"],
])
def test_mackey_passes(capsys, argv):
    code, out, _ = run(capsys, "mackey", "gl2", *argv)
    assert code == 0
    assert out.rstrip().endswith("result: PASS")


def test_mackey_invalid_triple(capsys):
    code, _, _ = run(capsys, "mackey", "gl2", "--lambda=1,0", "--lambdaprime=1,0", "--mu=1,1")
    assert code == 2


def test_mackey_counterexample_exit_code(capsys, monkeypatch):
    real = cli.ops.mackey_rhs

    def broken(*args, **kw):
        out = real(*args, **kw)
        return cli.ops.ModuleElement(out.value + 1, out.flat, out.group, out.support)

    monkeypatch.setattr(cli.ops, "mackey_rhs", broken)
    code, out, _ = run(capsys, "mackey", "gl2", "--lambda=1,0", "--lambdaprime=-1,-1", "--mu=0,0")
    assert code == 1
    assert "counterexample" in out and "result: FAIL" in out


def test_mackey_json(capsys):
    code, out, _ = run(capsys, "mackey", "gl2", "--lambda=1,0", "--lambdaprime=-1,-1", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["counts"]["mackey"] == {"pass": 1, "fail": 0}


# ---------------------------------------------------------------------------
# verify


def _body(text):
    return "\n".join(line for line in text.splitlines() if not line.startswith("duration"))


def test_verify_gl2_deterministic(capsys):
    code, first, _ = run(capsys, "verify", "gl2", "--trials", "2", "--seed", "7")
    assert code == 0
    _, second, _ = run(capsys, "verify", "gl2", "--trials", "2", "--seed", "7")
    assert _body(first) == _body(second)
    mackey = next(line for line in first.splitlines() if line.strip().startswith("mackey "))
    assert int(mackey.split()[2]) > 50


def test_verify_torus_json(capsys, tmp_path):
    path = tmp_path / "t.json"
    save_spec(rep_torus([(1, 0), (0, 1), (1, -1)]), path)
    code, out, _ = run(capsys, "verify", str(path), "--trials", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert data["counts"]["torus-single-term"]["fail"] == 0
    assert data["counts"]["torus-single-term"]["pass"] == data["counts"]["mackey"]["pass"]


def test_verify_counterexample(capsys, monkeypatch):
    import coxmackey.verify as verify
    monkeypatch.setattr(verify, "mackey_terms", lambda *a, **k: [])
    code, out, _ = run(capsys, "verify", "gl1", "--trials", "1", "--json")
    data = json.loads(out)
    assert code == 1
    fails = sum(v["fail"] for v in data["counts"].values())
    assert fails == len(data["counterexamples"]) > 0


# ---------------------------------------------------------------------------
# plot


def _svg_counts(path):
    root = ET.parse(path).getroot()
    lines = [e for e in root.iter(SVG + "line") if e.get("class") == "hyperplane"]
    labels = [e for e in root.iter(SVG + "text") if e.get("class") == "cell-label"]
    return len(lines), len(labels), [e.text for e in labels]


def test_plot_gl2(capsys, tmp_path):
    out = tmp_path / "gl2.svg"
    code, _, _ = run(capsys, "plot", "gl2", "--out", str(out))
    assert code == 0
    n_lines, n_labels, texts = _svg_counts(out)
    assert (n_lines, n_labels) == (3, 13)
    assert {"(0,0)", "(-1,-2)", "(2,1)", "(1,0)", "(1,1)"} <= set(texts)


def test_plot_adjoint_and_torus(capsys, tmp_path):
    out = tmp_path / "adj.svg"
    assert run(capsys, "plot", "gl2-adjoint", "--out", str(out))[0] == 0
    assert _svg_counts(out)[:2] == (1, 3)
    spec = tmp_path / "t.json"
    save_spec(rep_torus([(1, 0), (0, 1)]), spec)
    out = tmp_path / "t.svg"
    assert run(capsys, "plot", str(spec), "--out", str(out))[0] == 0
    assert _svg_counts(out)[:2] == (2, 9)


def test_plot_wrong_rank(capsys, tmp_path):
    code, _, _ = run(capsys, "plot", "gl3", "--out", str(tmp_path / "x.svg"))
    assert code == 2


# ---------------------------------------------------------------------------
# wheel


@pytest.mark.parametrize("spec,poly,code", [
    ("T*gl1-aux", "1", 1),
    ("T*gl1-aux", "t1+x1", 0),
    ("T*gl2-aux", "(x1 + t1)*(x2 + t1)", 0),
    ("T*gl2-aux", "(x1 + t1)*(t2 - x1)", 1),
    ("gl2", "x1", 2),
    ("T*gl1-aux", "x2", 2),
])
def test_wheel_exit_codes(capsys, spec, poly, code):
    assert run(capsys, "wheel", spec, "--poly", poly)[0] == code


def test_wheel_counts_json(capsys):
    code, out, _ = run(capsys, "wheel", "T*gl2-aux", "--poly", "1", "--json", "--no-cartan")
    data = json.loads(out)
    assert code == 1 and data["root_subspaces"] == 2 and data["cartan_subspaces"] == 0


# ---------------------------------------------------------------------------


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coxmackey", "query", "gl2", "kernel",
                           "--lambda=-2,-1", "--mu=0,0"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "x1*x2/(x1 - x2)"


def test_bad_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as info:
        cli.main(["frobnicate"])
    assert info.value.code == 2

import json
import subprocess
import sys

import pytest

from hambn.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def fixture_file(tmp_path, capsys):
    def make(name):
        main(["fixture", name])
        path = tmp_path / f"{name}.bn"
        path.write_text(capsys.readouterr().out)
        return str(path)

    return make


@pytest.fixture
def family_file(tmp_path, capsys):
    def make(n, kind="f"):
        main(["construct", kind, "--n", str(n)])
        path = tmp_path / f"{kind}{n}.bn"
        path.write_text(capsys.readouterr().out)
        return str(path)

    return make


def test_pipeline_fixture_into_classify():
    shell = f"{sys.executable} -m hambn.cli fixture bridoux5 | {sys.executable} -m hambn.cli classify"
    res = subprocess.run(shell, shell=True, capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "hamiltonian-cycle"


def test_family_dot(capsys, family_file):
    code, out, _ = run(capsys, "dynamics", family_file(3), "--dot")
    assert code == 0
    arcs = {line.strip().rstrip(";").replace('"', "").replace(" ", "") for line in out.splitlines() if "->" in line}
    assert arcs == {"000->100", "100->110", "110->010", "010->111", "111->011", "011->001", "001->101", "101->000"}


def test_threshold_check_on_family_four(capsys, family_file):
    code, out, _ = run(capsys, "check", "threshold", "--fn", "4", family_file(4))
    assert out.startswith("feasible") and code == 0


@pytest.mark.xfail(strict=True, reason="f^[4]_4 is threshold, so the check reports feasible")
def test_threshold_check_on_family_four_reports_infeasible(capsys, family_file):
    code, out, _ = run(capsys, "check", "threshold", "--fn", "4", family_file(4))
    assert out.strip() == "infeasible" and code == 1


def test_eval_and_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "eval", "-", "01", stdin="n=2\nf1 = !x2\nf2 = x1\n", monkeypatch=monkeypatch)
    assert (code, out.strip()) == (0, "00")


def test_dynamics_summary(capsys, fixture_file):
    code, out, _ = run(capsys, "dynamics", fixture_file("ex1"))
    rows = dict(line.split("\t", 1) for line in out.strip().splitlines())
    assert rows["height"] == "3" and rows["period"] == "2"
    assert rows["gardens"] == "100 101" and rows["fixed_points"] == "000 111"


def test_igraph(capsys, fixture_file):
    code, out, _ = run(capsys, "igraph", fixture_file("ex3"))
    assert code == 0 and out.strip().endswith("connectivity\tunilateral")
    code, out, _ = run(capsys, "igraph", fixture_file("ex1"), "--at", "110")
    assert len([line for line in out.splitlines() if line.startswith("x")]) == 4


@pytest.mark.parametrize(
    "prop, name, extra, expected, status",
    [
        ("balanced", "f3", [], "balanced", 0),
        ("balanced", "ex1", [], "not-balanced", 1),
        ("unate", "f3", [], "unate", 0),
        ("monotone", "f3", [], "unate", 1),
        ("selfdual", "f3", [], "self-dual", 0),
        ("selfdual", "ex1", ["--index-set", "1"], "not-self-dual", 1),
        ("assumable", "ex1", ["--fn", "1"], "not-assumable", 1),
        ("threshold", "quasi3", ["--fn", "1"], "infeasible", 1),
    ],
)
def test_check(capsys, fixture_file, prop, name, extra, expected, status):
    code, out, _ = run(capsys, "check", prop, fixture_file(name), *extra)
    assert out.split("\t")[0].strip() == expected
    assert code == status


def test_check_needs_fn(capsys, fixture_file):
    code, _, err = run(capsys, "check", "threshold", fixture_file("f3"))
    assert code == 2 and "--fn" in err


def test_classify_witness(capsys, fixture_file):
    code, out, _ = run(capsys, "classify", fixture_file("ex3"))
    assert out.splitlines()[0] == "intermediate(4)"


def test_construct_variants(capsys):
    for kind in ("f", "h", "h-or-c", "h-and-d"):
        code, out, _ = run(capsys, "construct", kind, "--n", "3")
        assert code == 0 and out.startswith("n=3")
    code, out, _ = run(capsys, "construct", "realize", "--n", "3", "--period", "4", "--mode", "expr")
    assert code == 0 and "x1" in out
    code, _, _ = run(capsys, "construct", "realize", "--n", "3", "--period", "99")
    assert code == 2


def test_construct_two_hamiltonian(capsys):
    code, out, _ = run(capsys, "construct", "realize-2ham", "--target", "1,3,2,5,2,4,4,6")
    assert code == 0 and out.startswith("n=3")
    code, _, _ = run(capsys, "construct", "realize-2ham", "--target", "0,0,0,0")
    assert code == 1


def test_iso(capsys, fixture_file, tmp_path):
    code, out, _ = run(capsys, "iso", fixture_file("ex3"), fixture_file("ex3"))
    assert (code, out.strip()) == (0, "isomorphic")
    main(["construct", "realize", "--n", "3", "--period", "4"])
    path = tmp_path / "r.bn"
    path.write_text(capsys.readouterr().out)
    assert run(capsys, "iso", str(path), fixture_file("ex3"))[0] == 0
    assert run(capsys, "iso", fixture_file("ex2"), fixture_file("ex3"))[0] == 1


def test_usage_and_parse_errors(capsys, monkeypatch, tmp_path):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "dynamics", str(tmp_path / "missing.bn"))[0] == 2
    code, _, err = run(capsys, "dynamics", "-", stdin="n=2\nf1 = x3\nf2 = x1\n", monkeypatch=monkeypatch)
    assert code == 2 and "out of range" in err
    assert run(capsys, "eval", "-", "0101", stdin="n=1\nf1 = x1\n", monkeypatch=monkeypatch)[0] == 2


def test_verify_json_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "n2-signed-cycle", "--json")
    d = json.loads(out)
    assert code == 0 and d["verdict"] == "pass" and d["instances_checked"] == 256
    code, out, _ = run(capsys, "verify", "table1", "--n", "3-5")
    assert code == 1 and "fail" in out
    assert run(capsys, "verify", "family", "--n", "99")[0] == 2
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and len(out.strip().splitlines()) == 17


def test_verify_figure_and_csv(capsys, tmp_path):
    png, table = tmp_path / "t1.png", tmp_path / "t1.csv"
    code, _, err = run(capsys, "verify", "table1", "--n", "3-6", "--figure", str(png), "--csv", str(table))
    assert code == 1 and png.stat().st_size > 0
    rows = table.read_text().splitlines()
    assert rows[0] == "section,key,value" and any(r.startswith("summary,verdict,fail") for r in rows)
    png2 = tmp_path / "r.png"
    assert run(capsys, "verify", "realize", "--n", "1-3", "--figure", str(png2))[0] == 0
    assert png2.stat().st_size > 0


def test_dynamics_and_igraph_figures(capsys, fixture_file, tmp_path):
    a, b = tmp_path / "d.png", tmp_path / "g.png"
    assert run(capsys, "dynamics", fixture_file("ex2"), "--figure", str(a))[0] == 0
    assert run(capsys, "igraph", fixture_file("bridoux5"), "--figure", str(b))[0] == 0
    assert a.stat().st_size > 0 and b.stat().st_size > 0

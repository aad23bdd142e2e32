import json
import subprocess
import sys

import pytest

from oack.cli import EXIT_CAPACITY, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_norm(capsys):
    assert run(capsys, "norm", "--norm", "zero", "--vec", '["3","-1"]') == (EXIT_OK, "3")
    assert run(capsys, "norm", "--norm", "d", "--vec", '["1/2","-1/2"]') == (EXIT_OK, "1")


def test_poly_norm(capsys):
    assert run(capsys, "poly-norm", "--mu", '["1","-1"]', "--degree", "2") == (EXIT_OK, "1")
    assert run(capsys, "poly-norm", "--mu", '["1","-1"]', "--degree", "2", "--which", "reg") == (EXIT_OK, "2")
    code, out = run(capsys, "poly-norm", "--mu", '["1","-1"]', "--degree", "3", "--oracle")
    assert code == EXIT_OK and out == {"value": "2", "oracle": "2", "agree": True}
    code, out = run(capsys, "poly-norm", "--mu", '["1","-1"]', "--degree", "2", "--which", "reg", "--oracle")
    assert code == EXIT_OK and out["agree"]


def test_basic(capsys):
    code, out = run(capsys, "basic", "--mu", '["1","-1"]', "--degree", "2", "--x", '["1","1"]')
    assert code == EXIT_OK
    assert out["abs_value"] == "2" and out["local_sup"] == "1" and out["ratio"] == "2"


def test_vertices(capsys, tmp_path):
    code, out = run(capsys, "vertices", "--norm", "d", "--k", "2", "--check")
    assert code == EXIT_OK and len(out) == 6
    png = tmp_path / "d.png"
    code, _ = run(capsys, "vertices", "--norm", "zero", "--k", "2", "--figure", str(png))
    assert code == EXIT_OK and png.stat().st_size > 0
    assert run(capsys, "vertices", "--norm", "d", "--k", "3", "--figure", str(png))[0] == EXIT_USAGE


def test_isometries(capsys):
    code, out = run(capsys, "isometries", "--norm", "d", "--k", "2", "--classify")
    assert code == EXIT_OK and len(out) == 12
    assert sorted(r["kind"] for r in out).count("noncanonical") == 8
    assert run(capsys, "isometries", "--norm", "sup", "--k", "2", "--classify")[0] == EXIT_USAGE


def test_smooth_and_expose(capsys):
    code, out = run(capsys, "smooth", "--vec", '["1","1/2"]')
    assert out == {"gateaux": True, "frechet": True, "derivative": ["1", "0"]}
    code, out = run(capsys, "smooth", "--vec", '["1","1"]')
    assert out["derivative"] is None and not out["gateaux"]
    assert run(capsys, "expose", "--target", '["0","1","-1"]') == (EXIT_OK, ["0", "1/2", "-1/2"])
    assert run(capsys, "expose", "--target", '["1","1"]')[0] == EXIT_USAGE
    assert run(capsys, "smooth", "--vec", '["2","0"]')[0] == EXIT_USAGE


def test_sympoly(capsys):
    doc = json.dumps({"n": 2, "k": 2, "coeffs": [{"alpha": [1, 1], "c": "1"}]})
    assert run(capsys, "sympoly", "--poly", doc) == (
        EXIT_OK,
        {"orthogonally_additive": False, "orthosymmetric": False, "blackbox": False},
    )
    assert run(capsys, "sympoly", "--poly", "{}")[0] == EXIT_USAGE


def test_usage_errors(capsys):
    assert run(capsys, "norm", "--norm", "d", "--vec", "[0.5]")[0] == EXIT_USAGE
    assert run(capsys, "norm", "--norm", "d", "--vec", "nope")[0] == EXIT_USAGE
    assert run(capsys, "norm", "--norm", "d", "--vec", "[]")[0] == EXIT_USAGE
    assert run(capsys, "check", "--suite", "bogus")[0] == EXIT_USAGE
    with pytest.raises(SystemExit):
        main(["norm", "--norm", "l2", "--vec", "[1]"])


def test_capacity_exit(capsys, monkeypatch):
    monkeypatch.setenv("OACK_ENUM_CAP", "2")
    assert run(capsys, "vertices", "--norm", "d", "--k", "3")[0] == EXIT_CAPACITY


def test_check_is_deterministic(capsys):
    first = run(capsys, "check", "--suite", "norms", "--seed", "7")
    second = run(capsys, "check", "--suite", "norms", "--seed", "7")
    assert first == second
    assert first[0] == EXIT_OK and first[1]["failures"] == 0


def test_check_all_with_figures(capsys, tmp_path):
    code, out = run(capsys, "check", "--trials", "5", "--figures", str(tmp_path))
    assert code == EXIT_OK
    assert len(out["suites"]) == 10
    assert (tmp_path / "check_summary.png").exists()
    assert (tmp_path / "balls_k2.png").exists()


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "oack.cli", "norm", "--norm", "var", "--vec", '["1","-1"]'],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == '"2"\n'

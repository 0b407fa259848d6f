import json
import subprocess
import sys

import pytest

from jtk.cli import main
from jtk.hpoly import H
from jtk.matrix import PolyMatrix


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rmatrix_json(capsys):
    code, out, _ = run(capsys, "rmatrix", "--two-j1", "1", "--two-j2", "1")
    assert code == 0
    R = PolyMatrix.from_json(out)
    assert R.row(0) == (1, H, -H, H * H)


def test_similarity_text_and_json(capsys):
    code, out, _ = run(capsys, "similarity", "--from", "contraction", "--to", "minimal", "--order", "5",
                       "--format", "text")
    assert code == 0
    assert out.split() == ["c1", "=", "1/2", "c2", "=", "1/4", "c3", "=", "1/8", "c4", "=", "1/24",
                           "c5", "=", "-1/96"]
    code, out, _ = run(capsys, "similarity", "--from", "contraction", "--order", "3", "--mu")
    obj = json.loads(out)
    assert obj["lambda"] == ["1/2", "1/4", "1/8"]
    assert obj["mu"][:2] == ["0/1", "1/2"]


def test_env_default_order(capsys, monkeypatch):
    monkeypatch.setenv("JTK_DEFAULT_ORDER", "4")
    _, out, _ = run(capsys, "solve-map", "--map", "diag")
    obj = json.loads(out)
    assert obj["order"] == 4 and len(obj["forward"]["F3"]) == 4
    monkeypatch.setenv("JTK_DEFAULT_ORDER", "zero")
    code, _, err = run(capsys, "solve-map")
    assert code == 2 and "JTK_DEFAULT_ORDER" in err


def test_solve_map_with_phi(capsys):
    code, out, _ = run(capsys, "solve-map", "--phi", "2*tanh(w/2)", "--order", "6")
    assert code == 0
    assert json.loads(out)["forward"]["F2"] == ["1/1"] + ["0/1"] * 5
    code, _, err = run(capsys, "solve-map", "--phi", "w + +")
    assert code == 2 and "position 5" in err


def test_build_irrep_and_eval(capsys):
    code, out, _ = run(capsys, "build-irrep", "--map", "minimal", "--two-j", "2")
    gens = json.loads(out)["generators"]
    assert set(gens) == {"T", "Tinv", "H", "Y", "X"}
    code, out, _ = run(capsys, "eval", "T*Tinv", "--two-j", "3")
    assert PolyMatrix.from_json(out).is_identity()
    code, out, _ = run(capsys, "eval", "T*Y - (1/2)*h*(T*H)^2 - (1/8)*h*(T^2 - 1)", "--two-j", "2")
    _, jm, _ = run(capsys, "eval", "J-", "--two-j", "2")
    assert out == jm
    code, _, err = run(capsys, "eval", "exp(H)", "--two-j", "1")
    assert code == 2 and "nilpotent" in err


def test_twist_output(capsys, tmp_path):
    path = tmp_path / "twist.json"
    code, out, _ = run(capsys, "twist", "--map", "contraction", "--two-j1", "1", "--two-j2", "2",
                       "--out", str(path))
    assert code == 0 and out == ""
    mats = json.loads(path.read_text())["matrices"]
    assert set(mats) == {"V", "F", "FS", "R"}
    assert PolyMatrix.from_json_obj(mats["F"]).rows == 6


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ybe", "--two-j1", "1", "--two-j2", "1", "--two-j3", "1")
    assert code == 0 and "verdict: pass" in out
    code, _, _ = run(capsys, "verify", "--suite", "algebra", "--map", "nowhere")
    assert code == 2
    code, _, err = run(capsys, "rmatrix", "--two-j1", "1")
    assert code == 2


def test_verify_json_is_byte_identical(capsys):
    args = ["verify", "--suite", "cocycle", "--map", "diag", "--two-j1", "1", "--two-j2", "2", "--format", "json"]
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert json.loads(first)["verdict"] == "pass"


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["verify", "--suite", "bogus"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "jtk", "rmatrix", "--two-j1", "0", "--two-j2", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert PolyMatrix.from_json(proc.stdout).is_identity()


def test_failing_check_exits_1(capsys, monkeypatch):
    from jtk import suites
    from jtk.report import CheckResult

    def broken(cfg):
        yield CheckResult.from_flag("broken.demo", "demo", False)

    monkeypatch.setitem(suites._SUITE_FUNCS, "algebra", broken)
    code, out, _ = run(capsys, "verify", "--suite", "algebra", "--two-j", "1")
    assert code == 1 and "verdict: fail" in out

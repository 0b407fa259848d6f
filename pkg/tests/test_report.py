import json

import pytest

from jtk.errors import ConfigError
from jtk.hpoly import H
from jtk.matrix import PolyMatrix, identity
from jtk.report import CheckReport, CheckResult, emit_json
from jtk.suites import SuiteConfig, config_from_spins, run_suite


def test_verdict_and_round_trip():
    bad = PolyMatrix.from_rows([[0, H * H], [0, 0]])
    report = CheckReport("demo", "minimal", [[1, 1]], [
        CheckResult.from_residual("a", "first anchor", PolyMatrix.zeros(2)),
        CheckResult.from_residual("b", "second anchor", bad, keep=True),
    ])
    assert report.verdict == "fail"
    assert [c.id for c in report.failures()] == ["b"]
    assert report.checks[1].max_degree == 2 and report.checks[1].nonzero == 1
    again = CheckReport.from_json(report.to_json())
    assert again == report
    assert again.to_json() == report.to_json()
    assert "FAIL  b" in report.to_text()


def test_emit_json():
    assert emit_json(identity(2)) == '{"rows":2,"cols":2,"entries":[[[[0,"1/1"]],[]],[[],[[0,"1/1"]]]]}'
    assert PolyMatrix.from_json(emit_json(identity(3))) == identity(3)
    with pytest.raises(TypeError):
        emit_json(3)


def test_all_suite_small_pair():
    report = run_suite("all", config_from_spins("minimal", two_j1=1, two_j2=1))
    assert report.verdict == "pass"
    assert 20 <= len(report.checks) <= 40
    assert {c.id.split(".")[0] for c in report.checks} == {
        "algebra", "roundtrip", "hopf", "twist", "ybe", "cocycle", "antipode", "similarity"}


def test_suite_is_deterministic():
    cfg = config_from_spins("diag", two_j1=1, two_j2=2)
    assert run_suite("twist", cfg).to_json() == run_suite("twist", cfg).to_json()


def test_ybe_triple():
    report = run_suite("ybe", config_from_spins("minimal", two_j1=1, two_j2=1, two_j3=1))
    assert report.passed
    assert any(c.id == "ybe.yang-baxter[2j=1,1,1]" for c in report.checks)


def test_config_errors_before_running():
    with pytest.raises(ConfigError):
        run_suite("nonsense")
    with pytest.raises(ConfigError):
        run_suite("algebra", SuiteConfig(map="no-such-map"))
    with pytest.raises(ConfigError):
        config_from_spins(two_j1=1)
    with pytest.raises(ConfigError):
        config_from_spins(two_j=-1)


def test_report_json_is_plain_json():
    report = run_suite("antipode", config_from_spins(two_j=1))
    obj = json.loads(report.to_json())
    assert obj["verdict"] == "pass"
    assert obj["spins"] == [[1], [1, 1], [1, 1, 1]]

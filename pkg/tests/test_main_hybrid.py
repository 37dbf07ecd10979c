import json
import logging
import os

import pytest

from config.qec_config import ORACLE_CAP_ENV
from data.catalog import EXAMPLE_DIR, example_text
from main_hybrid import EXIT_CAP, EXIT_FAIL, EXIT_INPUT, EXIT_OK, main

REP3 = os.path.join(EXAMPLE_DIR, "rep3.lin")


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def test_bounds(capsys):
    assert main(["bounds", "[[9,1:4,3:2]]"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "singleton: saturates" in out
    assert "trivial split: ruled_out" in out
    assert "against [[9,1:4,3:2]]: equal" in out
    assert "trade one quantum qudit: [[9,0:5,3:2]]_2" in out


def test_bounds_malformed(capsys):
    assert main(["bounds", "[[9,1,3]]"]) == EXIT_INPUT
    assert "error" in capsys.readouterr().err


def test_verify_shaw6(capsys):
    assert main(["verify", "shaw6", "--expect", "[[6,1:1,3:2]]"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "d = 3 (exact" in out
    assert "c = 2 (exact" in out
    assert "expected [[6,1:1,3:2]]_2: match" in out


def test_verify_mismatch(capsys):
    assert main(["verify", "shaw6", "--expect", "[[6,1:1,3:3]]"]) == EXIT_FAIL
    assert "MISMATCH" in capsys.readouterr().out


def test_verify_lower_bound(capsys):
    assert main(["verify", "shaw6", "--max-weight", "1", "--expect", "[[6,1:1,3:2]]"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "d > 1 (lower bound" in out
    assert "c > 1 (lower bound" in out


def test_verify_report(tmp_path, capsys):
    path = str(tmp_path / "report.json")
    assert main(["verify", "shaw6", "--expect", "[[6,1:1,3:2]]", "--report", path]) == EXIT_OK
    with open(path) as f:
        report = json.load(f)
    assert report["parameters"] == "[[6,1:1,3:2]]_2"
    assert report["match"] is True
    assert report["d"] == {"value": 3, "exact": True, "lower_bound": 3, "witness": report["d"]["witness"]}
    assert report["c"]["value"] == 2


def test_verify_subsystem(capsys):
    assert main(["verify", "baconshor9", "--expect", "[[9,1:4,3:2]]"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "subsystem: [[9,1,4,3]], singleton holds" in out


def test_verify_missing_file(capsys):
    assert main(["verify", "no_such_file.code"]) == EXIT_INPUT
    assert "no_such_file.code" in capsys.readouterr().err


def test_bc_hybrid_round_trip(tmp_path, capsys):
    path = str(tmp_path / "bs9.code")
    assert main(["bc", "--code1", REP3, "--code2", REP3, "--hybrid", "--emit", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "predicted: [[9,1:4,3:2]]_2" in out
    assert "enumerated: [[9,1:4,3:2]]_2" in out
    assert main(["verify", path, "--expect", "[[9,1:4,3:2]]"]) == EXIT_OK


def test_bc_subsystem(capsys):
    assert main(["bc", "--code1", REP3, "--code2", REP3]) == EXIT_OK
    out = capsys.readouterr().out
    assert "subsystem: [[9,1,4,3]]" in out
    assert "[gauge_x]" in out


def test_bc_field_mismatch(tmp_path, capsys):
    ternary = tmp_path / "rep3_q3.lin"
    ternary.write_text("q 3\nn 3 k 1\n1 1 1\n")
    assert main(["bc", "--code1", REP3, "--code2", str(ternary)]) == EXIT_INPUT


def test_kl_shaw6(capsys):
    assert main(["kl", "shaw6", "--d", "3", "--c", "2"]) == EXIT_OK
    assert "detection: pass" in capsys.readouterr().out
    assert main(["kl", "shaw6", "--d", "3", "--c", "3"]) == EXIT_FAIL
    assert "detection: fail" in capsys.readouterr().out


def test_kl_targets_from_catalog(capsys):
    assert main(["kl", "shaw6", "--correct"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "detection: pass (d=3, c=2" in out
    assert "correction: pass" in out


def test_kl_file_needs_targets(tmp_path, capsys):
    path = tmp_path / "shaw6.code"
    path.write_text(example_text("shaw6"))
    assert main(["kl", str(path)]) == EXIT_INPUT


def test_kl_dimension_cap(monkeypatch, capsys):
    monkeypatch.delenv(ORACLE_CAP_ENV, raising=False)
    assert main(["kl", "toric18"]) == EXIT_CAP
    assert "exceeds the oracle cap" in capsys.readouterr().err


def test_gauge_fix(capsys):
    assert main(["gauge-fix", "baconshor9", "--fix", "ZXZZ"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "[classical_stabilizer]" in out
    assert "[translations]" in out
    assert main(["gauge-fix", "baconshor9", "--fix", "ZQZZ"]) == EXIT_INPUT
    assert main(["gauge-fix", "shaw6"]) == EXIT_INPUT


def test_examples(capsys):
    assert main(["examples", "list"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "shaw6" in out and "[[6,1:1,3:2]]_2" in out
    assert main(["examples", "emit", "shaw6"]) == EXIT_OK
    assert capsys.readouterr().out == example_text("shaw6")
    assert main(["examples", "emit", "nosuch"]) == EXIT_INPUT


def test_unsupported_field(tmp_path, capsys):
    path = tmp_path / "q4.code"
    path.write_text("q 4\nn 2\n[quantum_stabilizer]\n(1|0) (1|0)\n[classical_stabilizer]\n(0|1) (0|1)\n")
    assert main(["verify", str(path)]) == EXIT_INPUT
    assert "error" in capsys.readouterr().err


@pytest.mark.slow
def test_verify_grassl12(capsys):
    assert main(["verify", "grassl12", "--expect", "[[12,1:1,5:5]]"]) == EXIT_FAIL
    out = capsys.readouterr().out
    assert "c = 4 (exact" in out


@pytest.mark.slow
def test_verify_toric18(capsys):
    assert main(["verify", "toric18", "--max-weight", "3", "--expect", "[[18,2:12,3:2]]"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "d = 3 (exact" in out
    assert "d_G = 2 (exact" in out

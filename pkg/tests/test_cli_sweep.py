import json
import logging

import pytest

from finitetype.cli import main
from finitetype.sweep import load_config, parse_config, plan, sweep

SMALL = {
    "k1_cases": 3, "k2_cases": 2, "general_cases": 1, "xind_cases": 1,
    "cequiv_k2_cases": 1, "cequiv_k3_cases": 1,
}


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_cli_bh(capsys):
    code, out = run(capsys, "bh", "--k", "1", "--d", "2,2")
    assert code == 0 and out.strip() == "s1 s1 s2 s2 s1^-1 s1^-1 s2^-1 s2^-1"


def test_cli_symbolic_prints_worked_sum(capsys):
    code, out = run(capsys, "symbolic", "--k", "1", "--d", "2,2", "--o", "000")
    assert code == 0 and out.splitlines()[0] == "e + p1 p2 - p2 m1"


def test_cli_symbolic_losing_convention_fails(capsys):
    code, _ = run(capsys, "symbolic", "--k", "1", "--d", "2,2", "--o", "010", "--conv", "multiplicative")
    assert code == 1


def test_cli_oracle(capsys):
    code, out = run(capsys, "symbolic", "--k", "1", "--oracle")
    assert code == 0 and "winner: additive" in out


def test_cli_check_json(capsys):
    code, out = run(capsys, "check", "--k", "1", "--d", "2,2", "--o", "000", "--t", "s1 s2", "--x", "s1 s2", "--inv", "c2", "--json")
    data = json.loads(out)
    assert code == 0 and data["equal"] and data["lhs"] == data["rhs"]


def test_cli_check_singular_rhs(capsys):
    code, out = run(capsys, "check", "--k", "2", "--d", "2,-2,2", "--t", "s1 s2 s3", "--x", "s1 s2 s3", "--inv", "j3", "--singular-rhs")
    assert code == 0 and "equal: True" in out


def test_cli_general(capsys):
    code, out = run(capsys, "general", "--n", "2", "--k", "1", "--d", "2,2;2,-2", "--t", "s1 s2 s3 s4 s5", "--x", "s1 s2 s3 s4 s5", "--inv", "c2")
    assert code == 0 and "equal: True" in out
    code, out = run(capsys, "general", "--n", "2", "--k", "1", "--d", "2,2", "--symbolic", "--literal")
    assert code == 1


def test_cli_expand_and_invariant(capsys):
    code, out = run(capsys, "expand", "--word", "s1^2 s2^2 s1^-2 s2^-2", "--max-sing", "2")
    assert out.strip() == "e + p1 p2 - p2 m1"
    code, out = run(capsys, "invariant", "--word", "s1^3", "--which", "jones")
    assert out.strip() == "-t^-4 + t^-3 + t^-1"
    code, out = run(capsys, "invariant", "--word", "s1 s2^-1 s1 s2^-1", "--which", "c2")
    assert out.strip() == "-1"


def test_cli_reports_errors(capsys):
    code = main(["check", "--k", "1", "--d", "2,2", "--t", "s1 s1", "--x", "s1 s1", "--inv", "c2"])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_config_formats(tmp_path):
    assert parse_config("k1_cases = 5\n# note\nforce=true\nconv=additive") == {"k1_cases": 5, "force": True, "conv": "additive"}
    assert parse_config('{"k1_cases": 2}') == {"k1_cases": 2}
    with pytest.raises(ValueError):
        parse_config("nonsense")
    p = tmp_path / "c.cfg"
    p.write_text("k2_cases=1\n")
    assert load_config(p)["k2_cases"] == 1 and load_config(p)["k1_cases"] == 50


def test_sweep_is_deterministic(tmp_path):
    a = sweep(SMALL, seed=4, out=tmp_path / "a")
    b = sweep(SMALL, seed=4, out=tmp_path / "b")
    assert a.ok and b.ok
    for name in ("report.json", "summary.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    assert sweep(SMALL, seed=5).to_json() != a.to_json()


def test_sweep_parallel_matches_serial():
    assert sweep({**SMALL, "workers": 2}, seed=1).to_json()["results"] == sweep(SMALL, seed=1).to_json()["results"]


def test_sweep_k4_warns(caplog):
    with caplog.at_level(logging.WARNING):
        cases = plan({**SMALL, "k4_cases": 1}, 0)
    assert "exceeds desk-scale budget" in caplog.text
    assert all(c.specs[0]["k"] < 4 for c in cases)
    forced = plan({**SMALL, "k4_cases": 1, "force": True}, 0)
    assert any(c.specs[0]["k"] == 4 for c in forced)


def test_failure_carries_reproduction(capsys):
    cfg = {"k1_cases": 0, "k2_cases": 4, "k2_invariants": "j3", "general_cases": 0, "xind_cases": 0, "cequiv_k2_cases": 0,
           "cequiv_k3_cases": 0, "orientations": "1", "conv": "multiplicative", "singular_rhs": False}
    res = sweep(cfg, seed=0)
    assert not res.ok
    f = res.failures[0]
    assert f.detail["repro"].startswith("python -m finitetype check --k 2")
    assert "--conv multiplicative" in f.detail["repro"]
    assert "--seed 0" in f.detail["sweep_repro"]
    assert len(f.detail["minimized"]["T"]) <= len(f.case.T)
    # the printed command really reproduces the failure
    argv = json.loads(json.dumps(f.detail["repro"])).split(" ", 3)[3]
    import shlex

    assert main(shlex.split(argv)) == 1

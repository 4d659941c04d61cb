import json
import os
import subprocess
import sys

import pytest

from symid.cli import main, parse_range
from symid import UsageError
from symid.identities.grid import default_workers, expand_grid, run_grid


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_range():
    assert list(parse_range("2..4")) == [2, 3, 4]
    assert list(parse_range("5")) == [5]
    for bad in ("4..2", "a", "1..", "-1"):
        with pytest.raises(UsageError):
            parse_range(bad)


def test_verify_eq25_grid(capsys):
    code, out = run(capsys, "verify", "--identity", "eq25", "--n", "2..6", "--workers", "1")
    assert code == 0
    assert "0 failed" in out


def test_verify_eq28_reports_discrepancy(capsys):
    code, out = run(capsys, "verify", "--identity", "eq28", "--n", "5", "--q", "3", "--format", "json")
    assert code == 1
    payload = json.loads(out)
    (inst,) = payload["instances"]
    assert inst["verdict"] == "fail" and inst["diff"] == "1"
    assert "Pascal" in inst["note"]


def test_verify_unknown_identity(capsys):
    assert main(["verify", "--identity", "nosuch", "--n", "3"]) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--identity", "eq25", "--n", "3", "--p", "1", "--q", "2"],
        ["verify", "--identity", "eq25", "--n", "13"],
        ["verify", "--identity", "eq12", "--n", "3", "--q", "2"],
        ["verify", "--identity", "eq12"],
        ["verify", "--identity", "eq12", "--n", "5..2"],
        ["derive", "--n", "3", "--degrees", "4,1"],
        ["derive", "--n", "3", "--degrees", "x"],
        ["table", "qbinom", "--n", "13"],
        ["table", "deleted", "--n", "3"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_derive_22(capsys):
    code, out = run(capsys, "derive", "--n", "4", "--degrees", "2,2")
    assert code == 0
    assert "e1*e1: 3" in out and "e2*e0: -2" in out
    assert "oracle: verified" in out


def test_derive_11(capsys):
    code, out = run(capsys, "derive", "--n", "3", "--degrees", "1,1")
    assert code == 0
    assert "= 3*e0*e0" in out


def test_derive_triple_json(capsys):
    code, out = run(capsys, "derive", "--n", "5", "--degrees", "3,2,2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["oracle"] == "verified"
    assert all(len(c["e"]) == 3 for c in payload["identity"]["coefficients"])


def test_table_qbinom(capsys):
    code, out = run(capsys, "table", "qbinom", "--n", "4")
    assert code == 0
    assert "[4,2] = 1 + q + 2*q^2 + q^3 + q^4" in out.splitlines()


def test_table_qbinom_zero(capsys):
    code, out = run(capsys, "table", "qbinom", "--n", "0")
    assert out.splitlines() == ["[0,0] = 1"]


def test_table_esym(capsys):
    code, out = run(capsys, "table", "esym", "--n", "3")
    assert out.splitlines() == [
        "e0 = 1",
        "e1 = x1 + x2 + x3",
        "e2 = x1*x2 + x1*x3 + x2*x3",
        "e3 = x1*x2*x3",
    ]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--identity", "eq25,eq29", "--n", "2..4", "--format", "json"],
        ["verify", "--identity", "eq28", "--n", "1..4", "--format", "json"],
        ["derive", "--n", "4", "--degrees", "3,3,2", "--format", "json"],
        ["table", "deleted", "--n", "3", "--i", "2", "--format", "json"],
    ],
)
def test_json_round_trip(argv, capsys):
    main(argv)
    out = capsys.readouterr().out
    assert out == json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n"


def test_output_independent_of_workers(capsys):
    argv = ["verify", "--identity", "eq12,eq25,eq28", "--n", "1..5", "--format", "json"]
    outs = []
    for workers in ("1", "3"):
        main(argv + ["--workers", workers])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_workers_env(monkeypatch):
    monkeypatch.setenv("SYMID_WORKERS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("SYMID_WORKERS", "zero")
    with pytest.raises(UsageError):
        default_workers()


def test_grid_sorted_deterministic():
    jobs = expand_grid("eq29", [3, 2], {})
    reports = run_grid(list(reversed(jobs)), workers=1)
    assert [r.sort_key() for r in reports] == sorted(r.sort_key() for r in reports)
    assert reports[0].params[0] == ("N", 2)


def test_module_entry_point():
    env = dict(os.environ, SYMID_WORKERS="1")
    ok = subprocess.run([sys.executable, "-m", "symid", "verify", "--identity", "eq12", "--n", "3"], env=env, capture_output=True, text=True)
    assert ok.returncode == 0
    bad = subprocess.run([sys.executable, "-m", "symid", "verify", "--identity", "eq28", "--n", "5", "--q", "3"], env=env, capture_output=True, text=True)
    assert bad.returncode == 1
    assert "wall time" in bad.stderr and "wall time" not in bad.stdout

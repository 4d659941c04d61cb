"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary; all comparisons are exact."""

import json
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES
from symid.cli import main
from symid.identities.catalog import (
    check_eq12,
    check_eq19,
    check_eq25,
    check_eq28,
    check_eq29,
    check_series_relation_eq11,
    check_two_var_relation_eq24,
    eq19_sides,
)
from symid.identities.derive import (
    brute_force_oracle,
    derive_identity,
    eq25_coefficients,
    partial_fractions,
    t_table,
)
from symid.polycore import Poly, RationalFunction, rf_equal
from symid.qcomb import (
    RESOLVED_EXPONENT,
    binomial,
    deleted_elem_geometric,
    deleted_elem_geometric_closed,
    resolve_exponent,
)

README = Path(__file__).resolve().parents[1] / "README.md"


@contextmanager
def criterion(number: int, title: str, budget: float | None = None):
    started = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - started
        if ok and budget is not None and elapsed >= budget:
            ok = False
        limit = f" (budget {budget:g} s)" if budget is not None else ""
        ACCEPTANCE_LINES.append(
            f"[{number:2d}] {'PASS' if ok else 'FAIL'} {title}: {elapsed:.2f} s{limit}"
        )
    if budget is not None:
        assert elapsed < budget, f"criterion {number} took {elapsed:.2f} s"


def test_c01_eq12_suite():
    with criterion(1, "sum of deleted e_{p-1} equals (N-p+1) e_{p-1}, N<=8", 5):
        for n in range(1, 9):
            for p in range(1, n + 2):
                report = check_eq12(n, p)
                assert report.passed, report


def test_c02_eq25_suite():
    with criterion(2, "two-product identity, N=2..7, all p>=q>=2", 60):
        count = 0
        for n in range(2, 8):
            for p in range(2, n + 2):
                for q in range(2, p + 1):
                    report = check_eq25(n, p, q)
                    assert report.passed, report
                    count += 1
        assert count > 0


def test_c03_eq19_suite():
    with criterion(3, "q-binomial double sum, N<=8, and its q=1 reduction", 10):
        for n in range(1, 9):
            for p in range(0, n):
                report = check_eq19(n, p)
                assert report.passed, report
                lhs, rhs = eq19_sides(n, p)
                # q = 1 gives N C(N-1, p) = (N-p) C(N, p), the binomial form with p -> p+1
                assert lhs(1) == n * binomial(n - 1, p)
                assert rhs(1) == (n - p) * binomial(n, p)
                assert n * binomial(n - 1, p) == (n - p) * binomial(n, p)


def test_c04_eq16_exponent_resolution():
    with criterion(4, "deleted geometric closed form matches substitution, N<=6"):
        assert resolve_exponent(6) == [RESOLVED_EXPONENT]
        for n in range(1, 7):
            for p in range(1, n + 1):
                for i in range(1, n + 1):
                    assert deleted_elem_geometric_closed(n, p, i) == deleted_elem_geometric(n, p, i)
        assert RESOLVED_EXPONENT in README.read_text()


def test_c05_derivation_engine():
    with criterion(5, "derived pairs match closed form; derived triples match brute force, N<=6", 120):
        for n in range(1, 7):
            for p in range(2, n + 1):
                for q in range(2, p + 1):
                    derived = derive_identity(n, (p, q))
                    assert derived.coefficients == eq25_coefficients(n, p, q)
                    assert derived.expand() == brute_force_oracle(n, (p, q))
            for p in range(1, n + 1):
                for q in range(1, n + 1):
                    for r in range(1, n + 1):
                        derived = derive_identity(n, (p, q, r))
                        assert derived.expand() == brute_force_oracle(n, (p, q, r)), (n, p, q, r)


def test_c06_partial_fractions():
    with criterion(6, "partial fractions: order 2 coefficients, order 3 defining relation"):
        table = t_table(2)
        t1, t2 = (Poly.var(t, table) for t in table)
        f1, f2 = partial_fractions(2).coefficients
        assert rf_equal(f1, RationalFunction(-(t1**2), t1 - t2))
        assert rf_equal(f2, RationalFunction(t2**2, t1 - t2))
        assert partial_fractions(2).defining_relation_holds()
        assert partial_fractions(3).defining_relation_holds()


def test_c07_eq29_suite():
    with criterion(7, "difference-sum binomial identity, N<=10, p>=q, p+q<=2N"):
        assert check_eq29(4, 2, 2).passed
        from symid.identities.catalog import eq29_sides

        assert eq29_sides(4, 2, 2) == (24, 24)
        for n in range(1, 11):
            for p in range(0, 2 * n + 1):
                for q in range(0, p + 1):
                    if p + q <= 2 * n:
                        report = check_eq29(n, p, q)
                        assert report.passed, report


def test_c08_eq28_discrepancy(capsys):
    with criterion(8, "Pascal-type relation: stated form flagged, corrected reading holds"):
        stated = check_eq28(5, 3)
        assert not stated.passed and stated.diff == "1"
        for n in range(1, 11):
            for q in range(1, n + 3):
                assert check_eq28(n, q, reading="pascal").passed
        code = main(["verify", "--identity", "eq28", "--n", "5", "--q", "3", "--format", "json", "--workers", "1"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 1
        assert payload["instances"][0]["diff"] == "1"
        assert payload["summary"]["failures"] == 1


def test_c09_series_relations():
    with criterion(9, "single and two-parameter generating relations, N<=4, cutoff N+2"):
        for n in range(1, 5):
            assert check_series_relation_eq11(n, n + 2).passed
            assert check_two_var_relation_eq24(n, n + 2).passed


def test_c10_cli_contract(capsys):
    with criterion(10, "CLI exit codes, JSON round trip, worker independence"):
        assert main(["verify", "--identity", "eq25", "--n", "2..6", "--workers", "1"]) == 0
        assert main(["verify", "--identity", "eq28", "--n", "5", "--q", "3", "--workers", "1"]) == 1
        assert main(["verify", "--identity", "nosuch", "--n", "3"]) == 2
        with pytest.raises(SystemExit) as exc:
            main(["verify"])
        assert exc.value.code == 2
        capsys.readouterr()

        argv = ["verify", "--identity", "eq12,eq19,eq25,eq28,eq29", "--n", "1..6", "--format", "json"]
        outs = []
        for workers in ("1", "4"):
            main(argv + ["--workers", workers])
            outs.append(capsys.readouterr().out)
        assert outs[0] == outs[1]
        assert outs[0] == json.dumps(json.loads(outs[0]), indent=2, sort_keys=True) + "\n"

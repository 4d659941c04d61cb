"""Identity instances, check reports and their JSON form."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

from symid.polycore import Poly, TruncatedSeries, render


@dataclass(frozen=True)
class IdentityInstance:
    identity: str
    params: tuple  # ((name, value), ...) in the identity's parameter order
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    params: tuple
    passed: bool
    diff: str | None = None
    note: str | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def sort_key(self) -> tuple:
        return (self.identity, tuple(v for _, v in self.params))

    def label(self) -> str:
        args = " ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.identity} {args}".strip()

    def to_json(self) -> dict:
        out = {"identity": self.identity, "params": dict(self.params), "verdict": self.verdict}
        if self.diff is not None:
            out["diff"] = self.diff
        if self.note is not None:
            out["note"] = self.note
        return out


def difference(lhs, rhs):
    """rhs - lhs in whatever ring the sides live in."""
    if isinstance(lhs, TruncatedSeries):
        return (rhs - lhs).body
    return rhs - lhs


def is_zero(value) -> bool:
    if isinstance(value, int):
        return value == 0
    return value.is_zero()


def text(value) -> str:
    if isinstance(value, Poly):
        return render(value)
    return str(value)


def check(instance: IdentityInstance, started: float | None = None, note: str | None = None) -> IdentityReport:
    """Report on ``instance``; the difference is recorded only on failure."""
    diff = difference(instance.lhs, instance.rhs)
    passed = is_zero(diff)
    elapsed = time.perf_counter() - started if started is not None else 0.0
    return IdentityReport(
        identity=instance.identity,
        params=instance.params,
        passed=passed,
        diff=None if passed else text(diff),
        note=note,
        elapsed=elapsed,
    )

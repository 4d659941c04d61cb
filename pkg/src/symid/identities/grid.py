"""Parameter grids and a concurrent runner for identity checks."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import groupby, product
from typing import Mapping, Sequence

from symid import symfn
from symid.errors import UsageError
from symid.identities.catalog import CATALOG, run_instance
from symid.identities.report import IdentityReport

WORKERS_ENV = "SYMID_WORKERS"


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
        if value < 1:
            raise UsageError(f"{WORKERS_ENV} must be positive, got {value}")
        return value
    return os.cpu_count() or 1


def expand_grid(identity: str, n_values: Sequence[int], ranges: Mapping[str, Sequence[int]]) -> list:
    """Instances ``(identity, ((name, value), ...))`` for every N.

    Parameters absent from ``ranges`` sweep their full valid range.  A
    combination of user-given values that is valid for no completion is a
    usage error rather than being skipped.
    """
    if identity not in CATALOG:
        raise UsageError(f"unknown identity {identity!r}; known: {', '.join(CATALOG)}")
    entry = CATALOG[identity]
    extra = sorted(set(ranges) - set(entry.params))
    if extra:
        raise UsageError(f"{identity} takes no parameter(s) {', '.join(extra)}")
    fixed = [k for k, name in enumerate(entry.params) if name in ranges]
    out = []
    for n in n_values:
        if not 1 <= n <= symfn.MAX_N:
            raise UsageError(f"N={n} outside 1..{symfn.MAX_N}")
        candidates = []
        for name in entry.params:
            candidates.append(list(ranges[name]) if name in ranges else None)
        valid = set(entry.grid(n))
        if fixed:
            # explicit values replace the sweep for their parameter
            chosen = []
            for values in product(*[c for c in candidates if c is not None]):
                matches = [
                    combo for combo in sorted(valid)
                    if all(combo[k] == v for k, v in zip(fixed, values))
                ]
                if not matches:
                    given = ", ".join(f"{entry.params[k]}={v}" for k, v in zip(fixed, values))
                    raise UsageError(f"{identity}: no valid instance for N={n}, {given}")
                chosen.extend(matches)
            combos = chosen
        else:
            combos = list(entry.grid(n))
        for combo in combos:
            out.append((identity, (("N", n),) + tuple(zip(entry.params, combo))))
    return out


def _run(job: tuple) -> IdentityReport:
    return run_instance(*job)


def run_grid(jobs: Sequence[tuple], workers: int = 1) -> list[IdentityReport]:
    """Run every job and return reports sorted by identity then parameters."""
    jobs = list(dict.fromkeys(jobs))
    if workers <= 1 or len(jobs) <= 1:
        reports = [_run(job) for job in jobs]
    else:
        chunk = max(1, len(jobs) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run, jobs, chunksize=chunk))
    return sorted(reports, key=IdentityReport.sort_key)


def summarize(reports: Sequence[IdentityReport]) -> dict:
    passes = sum(r.passed for r in reports)
    by_identity = {
        key: sum(1 for _ in group)
        for key, group in groupby(sorted(r.identity for r in reports))
    }
    return {
        "total": len(reports),
        "passes": passes,
        "failures": len(reports) - passes,
        "by_identity": by_identity,
    }

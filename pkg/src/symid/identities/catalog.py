"""Executable checks for each identity.

Every ``check_*`` function builds both sides in their natural ring
(polynomials in x, truncated series in t, polynomials in q, or integers) and
reports whether ``rhs - lhs`` vanishes identically.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from symid import qcomb, symfn
from symid.errors import UsageError
from symid.identities import derive
from symid.identities.report import IdentityInstance, IdentityReport, check
from symid.polycore import Poly, TruncatedSeries
from symid.qcomb import QPoly, binom, q_binom


def _usage(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


def _check_n(n: int) -> None:
    _usage(1 <= n <= symfn.MAX_N, f"N={n} outside 1..{symfn.MAX_N}")


def _gen_one_past(n: int, table: tuple, param: str, cutoff: int) -> tuple:
    """E(x,t) built one order past ``cutoff`` so derivatives in t stay exact."""
    series = symfn.gen_function(n, cutoff + 1, param)
    body = series.body.with_variables(table)
    return TruncatedSeries(body, (param,), cutoff + 1)


# -- single generating function ---------------------------------------------

def check_series_relation_eq11(n: int, cutoff: int | None = None) -> IdentityReport:
    """sum_i dE/dx_i = N t E - t^2 dE/dt, truncated in t."""
    started = time.perf_counter()
    _check_n(n)
    cutoff = n + 1 if cutoff is None else cutoff
    _usage(cutoff >= n + 1, f"cutoff must be at least N+1={n + 1}")
    table = symfn.variables(n) + ("t",)
    e = _gen_one_past(n, table, "t", cutoff)
    t = TruncatedSeries(Poly.var("t", table), ("t",), cutoff + 1)
    lhs = TruncatedSeries(Poly({}, table), ("t",), cutoff)
    for v in symfn.variables(n):
        lhs = lhs + TruncatedSeries(e.body.diff(v), ("t",), cutoff)
    e_c = TruncatedSeries(e.body, ("t",), cutoff)
    t_c = TruncatedSeries(t.body, ("t",), cutoff)
    rhs = t_c * e_c * n - t_c * t_c * e.diff("t")
    return check(IdentityInstance("eq11", (("N", n), ("cutoff", cutoff)), lhs, rhs), started)


def check_eq12(n: int, p: int) -> IdentityReport:
    """sum_i e_{p-1}^(i) = (N - p + 1) e_{p-1}."""
    started = time.perf_counter()
    _check_n(n)
    _usage(1 <= p <= n + 1, f"eq12 needs 1 <= p <= N+1, got p={p}")
    full, deleted = symfn.build_tables(n)
    lhs = Poly({}, symfn.variables(n))
    for row in deleted:
        lhs = lhs + row[p - 1]
    rhs = full[p - 1].scale(n - p + 1)
    return check(IdentityInstance("eq12", (("N", n), ("p", p)), lhs, rhs), started)


def check_eq14(n: int, p: int) -> IdentityReport:
    """N C(N-1, p-1) = (N - p + 1) C(N, p-1)."""
    started = time.perf_counter()
    _check_n(n)
    _usage(1 <= p <= n, f"eq14 needs 1 <= p <= N, got p={p}")
    lhs = n * binom(n - 1, p - 1)
    rhs = (n - p + 1) * binom(n, p - 1)
    return check(IdentityInstance("eq14", (("N", n), ("p", p)), lhs, rhs), started)


# -- geometric specialization ---------------------------------------------------

def check_eq16(n: int, p: int, i: int) -> IdentityReport:
    """Closed form of e_{p-1}^(i)(1, q, ..., q^(N-1)) against direct substitution."""
    started = time.perf_counter()
    _check_n(n)
    _usage(1 <= p <= n and 1 <= i <= n, f"eq16 needs 1 <= p, i <= N, got p={p}, i={i}")
    lhs = qcomb.deleted_elem_geometric(n, p, i)
    rhs = qcomb.deleted_elem_geometric_closed(n, p, i)
    return check(IdentityInstance("eq16", (("N", n), ("p", p), ("i", i)), lhs, rhs), started)


def check_eq17(n: int, p: int) -> IdentityReport:
    """sum_i sum_u q^{u(u-(p-i-1))} [N-i, u][i-1, p-1-u] = (N - p + 1)[N, p-1].

    Each inner sum on the left is taken from direct substitution, divided by
    the common prefactor q^((p-1)(p-2)/2).
    """
    started = time.perf_counter()
    _check_n(n)
    _usage(1 <= p <= n, f"eq17 needs 1 <= p <= N, got p={p}")
    shift = (p - 1) * (p - 2) // 2
    lhs = qcomb.ZERO
    for i in range(1, n + 1):
        lhs = lhs + qcomb.deleted_elem_geometric(n, p, i).shift(-shift)
    rhs = q_binom(n, p - 1) * (n - p + 1)
    return check(IdentityInstance("eq17", (("N", n), ("p", p)), lhs, rhs), started)


def eq19_sides(n: int, p: int) -> tuple[QPoly, QPoly]:
    lhs = qcomb.ZERO
    for i in range(p + 1, n + 1):
        for u in range(p + 1):
            lhs = lhs + (q_binom(n + u - i, u) * q_binom(i - u - 1, p - u)).shift(u * (i - p))
    rhs = q_binom(n, p) * (n - p)
    return lhs, rhs


def check_eq19(n: int, p: int) -> IdentityReport:
    """sum_{i>p} sum_u q^{u(i-p)} [N+u-i, u][i-u-1, p-u] = (N - p)[N, p]."""
    started = time.perf_counter()
    _check_n(n)
    _usage(0 <= p <= n - 1, f"eq19 needs 0 <= p <= N-1, got p={p}")
    lhs, rhs = eq19_sides(n, p)
    return check(IdentityInstance("eq19", (("N", n), ("p", p)), lhs, rhs), started)


# -- two generating functions ---------------------------------------------------

def check_two_var_relation_eq24(n: int, cutoff: int | None = None) -> IdentityReport:
    """The two-parameter relation for sum_i dE(t1)/dx_i dE(t2)/dx_i, with
    both sides multiplied by (t1 - t2)."""
    started = time.perf_counter()
    _check_n(n)
    cutoff = n + 1 if cutoff is None else cutoff
    _usage(cutoff >= n + 1, f"cutoff must be at least N+1={n + 1}")
    xs = symfn.variables(n)
    table = xs + ("t1", "t2")
    formal = ("t1", "t2")
    top = cutoff + 1

    def series(p: Poly) -> TruncatedSeries:
        return TruncatedSeries(p.with_variables(table), formal, top)

    def gen(param: str) -> Poly:
        return symfn.gen_function(n, n, param).body

    e1 = series(substitute_param(gen("t1"), "t1", table))
    e2 = series(substitute_param(gen("t2"), "t2", table))
    t1 = series(Poly.var("t1", table))
    t2 = series(Poly.var("t2", table))
    lhs = TruncatedSeries(Poly({}, table), formal, top)
    for v in xs:
        lhs = lhs + e1.diff(v) * e2.diff(v)
    lhs = (t1 - t2) * lhs
    rhs = (t1 - t2) * t1 * t2 * e1 * e2 * n - t1 * t2 * (
        t1 * t1 * e1.diff("t1") * e2 - t2 * t2 * e1 * e2.diff("t2")
    )
    lhs = TruncatedSeries(lhs.body, formal, cutoff)
    rhs = TruncatedSeries(rhs.body, formal, cutoff)
    return check(IdentityInstance("eq24", (("N", n), ("cutoff", cutoff)), lhs, rhs), started)


def substitute_param(p: Poly, name: str, table: tuple) -> Poly:
    """Move a polynomial over ``x1..xN, name`` into ``table``."""
    out = {}
    src = p.variables
    for m, c in p.items():
        exps = [0] * len(table)
        for k, e in enumerate(m):
            exps[table.index(src[k])] = e
        out[tuple(exps)] = c
    return Poly(out, table)


def _check_pq(n: int, p: int, q: int, tag: str) -> None:
    _check_n(n)
    _usage(p >= q >= 2, f"{tag} needs p >= q >= 2, got p={p}, q={q}")
    _usage(p - 1 <= n and q - 1 <= n, f"{tag} needs p-1, q-1 <= N, got p={p}, q={q}")


def check_eq25(n: int, p: int, q: int) -> IdentityReport:
    """sum_i e_{p-1}^(i) e_{q-1}^(i) = (N-p+1) e_{p-1} e_{q-1}
    - sum_{r=0}^{q-2} (p+q-2-2r) e_{p+q-2-r} e_r."""
    started = time.perf_counter()
    _check_pq(n, p, q, "eq25")
    full, deleted = symfn.build_tables(n)
    lhs = Poly({}, symfn.variables(n))
    for row in deleted:
        lhs = lhs + row[p - 1] * row[q - 1]
    rhs = (full[p - 1] * full[q - 1]).scale(n - p + 1)
    for r in range(q - 1):
        rhs = rhs - (full[p + q - 2 - r] * full[r]).scale(p + q - 2 - 2 * r)
    return check(IdentityInstance("eq25", (("N", n), ("p", p), ("q", q)), lhs, rhs), started)


# -- binomial corollaries -------------------------------------------------------

def eq26_sides(n: int, p: int, q: int) -> tuple[int, int]:
    lhs = n * binom(n - 1, p - 1) * binom(n - 1, q - 1)
    rhs = (n - p + 1) * binom(n, p - 1) * binom(n, q - 1) - sum(
        (p + q - 2 - 2 * r) * binom(n, p + q - 2 - r) * binom(n, r) for r in range(q - 1)
    )
    return lhs, rhs


def check_eq26(n: int, p: int, q: int) -> IdentityReport:
    """All-ones specialization of the two-product identity."""
    started = time.perf_counter()
    _check_pq(n, p, q, "eq26")
    lhs, rhs = eq26_sides(n, p, q)
    return check(IdentityInstance("eq26", (("N", n), ("p", p), ("q", q)), lhs, rhs), started)


def check_eq27(n: int, p: int, q: int) -> IdentityReport:
    """Rearranged binomial form; the second sum is empty when q = 2."""
    started = time.perf_counter()
    _check_pq(n, p, q, "eq27")
    lhs = binom(n - 1, p - 1) * (binom(n, q - 1) - binom(n - 1, q - 1))
    rhs = sum(binom(n - 1, p + q - 3 - r) * binom(n, r) for r in range(q - 1)) - sum(
        binom(n, p + q - 2 - r) * binom(n - 1, r - 1) for r in range(1, q - 1)
    )
    return check(IdentityInstance("eq27", (("N", n), ("p", p), ("q", q)), lhs, rhs), started)


EQ28_READINGS = {
    "stated": lambda n, q: binom(n, q - 2),
    "pascal": lambda n, q: binom(n - 1, q - 2),
}


def check_eq28(n: int, q: int, reading: str = "stated") -> IdentityReport:
    """C(N, q-1) - C(N-1, q-1) against the right-hand side as stated,
    C(N, q-2), or against Pascal's rule, C(N-1, q-2).

    A failing stated-form check carries a note with the Pascal verdict.
    """
    started = time.perf_counter()
    _check_n(n)
    _usage(q >= 1, f"eq28 needs q >= 1, got q={q}")
    _usage(reading in EQ28_READINGS, f"unknown eq28 reading {reading!r}")
    lhs = binom(n, q - 1) - binom(n - 1, q - 1)
    rhs = EQ28_READINGS[reading](n, q)
    note = None
    if reading == "stated" and lhs != rhs:
        alt = EQ28_READINGS["pascal"](n, q)
        verdict = "pass" if alt == lhs else "fail"
        note = f"stated right side C(N,q-2)={rhs}; Pascal reading C(N-1,q-2)={alt}: {verdict}"
    identity = "eq28" if reading == "stated" else "eq28-pascal"
    return check(IdentityInstance(identity, (("N", n), ("q", q)), lhs, rhs), started, note)


def eq29_sides(n: int, p: int, q: int) -> tuple[int, int]:
    lhs = binom(n, p - 1) * binom(n, q)
    rhs = sum(
        binom(n + 1, p + q - s) * binom(n, s) - binom(n, p + q - s) * binom(n + 1, s)
        for s in range(q + 1)
    )
    return lhs, rhs


def check_eq29(n: int, p: int, q: int) -> IdentityReport:
    """C(N,p-1) C(N,q) = sum_{s=0}^{q} [C(N+1,p+q-s) C(N,s) - C(N,p+q-s) C(N+1,s)]."""
    started = time.perf_counter()
    _check_n(n)
    _usage(p >= q >= 0, f"eq29 needs p >= q >= 0, got p={p}, q={q}")
    lhs, rhs = eq29_sides(n, p, q)
    return check(IdentityInstance("eq29", (("N", n), ("p", p), ("q", q)), lhs, rhs), started)


# -- derived identities -----------------------------------------------------------

def check_triple(n: int, p: int, q: int, r: int) -> IdentityReport:
    """Derived three-product identity re-expanded against brute force."""
    started = time.perf_counter()
    _check_n(n)
    degrees = (p, q, r)
    _usage(all(1 <= d <= n for d in degrees), f"triple needs 1 <= p, q, r <= N, got {degrees}")
    derived = derive.derive_identity(n, degrees)
    instance = IdentityInstance(
        "triple", (("N", n), ("p", p), ("q", q), ("r", r)),
        derive.brute_force_oracle(n, degrees), derived.expand(),
    )
    return check(instance, started, note=derived.rhs_text())


# -- registry ---------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    """``params`` are the parameters after N; ``grid`` yields every valid
    assignment of them for a given N."""

    check: Callable[..., IdentityReport]
    params: tuple
    grid: Callable[[int], Iterator[tuple]]
    description: str


def _pq_grid(n: int) -> Iterator[tuple]:
    for p in range(2, n + 2):
        for q in range(2, p + 1):
            yield (p, q)


def _triple_grid(n: int) -> Iterator[tuple]:
    for p in range(1, n + 1):
        for q in range(1, p + 1):
            for r in range(1, q + 1):
                yield (p, q, r)


CATALOG: dict[str, CatalogEntry] = {
    "eq11": CatalogEntry(
        check_series_relation_eq11, ("cutoff",), lambda n: iter([(n + 2,)]),
        "sum_i dE/dx_i = N t E - t^2 dE/dt as truncated series",
    ),
    "eq12": CatalogEntry(
        check_eq12, ("p",), lambda n: ((p,) for p in range(1, n + 2)),
        "sum_i e_{p-1}^(i) = (N-p+1) e_{p-1}",
    ),
    "eq14": CatalogEntry(
        check_eq14, ("p",), lambda n: ((p,) for p in range(1, n + 1)),
        "N C(N-1,p-1) = (N-p+1) C(N,p-1)",
    ),
    "eq16": CatalogEntry(
        check_eq16, ("p", "i"),
        lambda n: ((p, i) for p in range(1, n + 1) for i in range(1, n + 1)),
        "closed form of e_{p-1}^(i)(1,q,...,q^(N-1)) vs substitution",
    ),
    "eq17": CatalogEntry(
        check_eq17, ("p",), lambda n: ((p,) for p in range(1, n + 1)),
        "double q-sum = (N-p+1)[N,p-1]",
    ),
    "eq19": CatalogEntry(
        check_eq19, ("p",), lambda n: ((p,) for p in range(0, n)),
        "reindexed double q-sum = (N-p)[N,p]",
    ),
    "eq24": CatalogEntry(
        check_two_var_relation_eq24, ("cutoff",), lambda n: iter([(n + 2,)]),
        "two-parameter generating relation, cleared of 1/(t1-t2)",
    ),
    "eq25": CatalogEntry(
        check_eq25, ("p", "q"), _pq_grid,
        "sum_i e_{p-1}^(i) e_{q-1}^(i) in terms of e_r",
    ),
    "eq26": CatalogEntry(check_eq26, ("p", "q"), _pq_grid, "all-ones specialization of eq25"),
    "eq27": CatalogEntry(check_eq27, ("p", "q"), _pq_grid, "rearranged binomial form of eq26"),
    "eq28": CatalogEntry(
        check_eq28, ("q",), lambda n: ((q,) for q in range(1, n + 2)),
        "C(N,q-1) - C(N-1,q-1) = C(N,q-2) as stated",
    ),
    "eq29": CatalogEntry(
        check_eq29, ("p", "q"),
        lambda n: ((p, q) for p in range(0, 2 * n + 1) for q in range(0, p + 1) if p + q <= 2 * n),
        "C(N,p-1) C(N,q) as a difference sum",
    ),
    "triple": CatalogEntry(
        check_triple, ("p", "q", "r"), _triple_grid,
        "derived sum_i e_{p-1}^(i) e_{q-1}^(i) e_{r-1}^(i) vs brute force",
    ),
}

IDENTITY_IDS = tuple(CATALOG)


def run_instance(identity: str, params: tuple) -> IdentityReport:
    """Run one catalog check; ``params`` is ((name, value), ...) starting with N."""
    if identity not in CATALOG:
        raise UsageError(f"unknown identity {identity!r}")
    return CATALOG[identity].check(*(v for _, v in params))

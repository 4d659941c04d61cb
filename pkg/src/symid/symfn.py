"""Power sums, elementary symmetric functions and their deleted variants.

Polynomials here live over the table ``("x1", ..., "xN")``.  Construction
uses the prefix recurrence

    e_r(x_1..x_k) = e_r(x_1..x_{k-1}) + x_k * e_{r-1}(x_1..x_{k-1})

which costs O(N*r) polynomial operations; the deleted tables run the same
recurrence on the variable list with one entry removed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from symid.errors import UsageError
from symid.polycore import Poly, TruncatedSeries, monomial

MAX_N = 12


def variables(n: int) -> tuple:
    if n < 1:
        raise UsageError(f"need at least one variable, got N={n}")
    return tuple(f"x{i}" for i in range(1, n + 1))


def elementary(values: Sequence[Poly], table: Sequence[str], top: int | None = None) -> list:
    """``[e_0, ..., e_top]`` of arbitrary polynomial values via the recurrence."""
    top = len(values) if top is None else top
    es = [Poly.const(1, table)] + [Poly({}, table)] * top
    for k, v in enumerate(values, start=1):
        for r in range(min(k, top), 0, -1):
            es[r] = es[r] + v * es[r - 1]
    return es


@dataclass(frozen=True)
class ElemSymTable:
    n: int
    entries: tuple  # e_0 .. e_N

    def __getitem__(self, r: int) -> Poly:
        if r < 0:
            raise UsageError("negative index")
        if r > self.n:
            return Poly({}, variables(self.n))
        return self.entries[r]


@dataclass(frozen=True)
class DeletedElemSymTable:
    n: int
    deleted: int
    entries: tuple  # e_0^(i) .. e_{N-1}^(i)

    def __getitem__(self, r: int) -> Poly:
        if r < 0:
            raise UsageError("negative index")
        if r >= self.n:
            return Poly({}, variables(self.n))
        return self.entries[r]


@lru_cache(maxsize=None)
def build_tables(n: int) -> tuple[ElemSymTable, tuple]:
    """Full table and the N deleted tables, all by the prefix recurrence."""
    table = variables(n)
    xs = [Poly.var(v, table) for v in table]
    full = ElemSymTable(n, tuple(elementary(xs, table)))
    deleted = tuple(
        DeletedElemSymTable(n, i, tuple(elementary(xs[: i - 1] + xs[i:], table)))
        for i in range(1, n + 1)
    )
    return full, deleted


def elem_sym(n: int, r: int) -> Poly:
    if r < 0:
        raise UsageError(f"negative degree r={r}")
    return build_tables(n)[0][r]


def elem_sym_deleted(n: int, r: int, i: int) -> Poly:
    if not 1 <= i <= n:
        raise UsageError(f"deleted index i={i} outside 1..{n}")
    if r < 0:
        raise UsageError(f"negative degree r={r}")
    return build_tables(n)[1][i - 1][r]


def elem_sym_enumerated(n: int, r: int, omit: int | None = None) -> Poly:
    """Subset-enumeration construction; exponential, kept as a test oracle."""
    if r < 0:
        raise UsageError(f"negative degree r={r}")
    idx = [k for k in range(n) if omit is None or k != omit - 1]
    terms = {}
    for subset in combinations(idx, r):
        exps = [0] * n
        for k in subset:
            exps[k] = 1
        terms[monomial(exps)] = 1
    return Poly(terms, variables(n))


def power_sum(n: int, r: int) -> Poly:
    if r < 1:
        raise UsageError(f"power sums start at r=1, got r={r}")
    table = variables(n)
    return Poly({(0,) * k + (r,): 1 for k in range(n)}, table)


def gen_function(n: int, cutoff: int, param: str = "t", product: bool = False) -> TruncatedSeries:
    """E(x, t) = sum_r e_r t^r truncated at ``cutoff``.

    With ``product=True`` the series is built as prod_i (1 + x_i t) instead.
    """
    table = variables(n) + (param,)
    t = Poly.var(param, table)
    if product:
        series = TruncatedSeries(Poly.const(1, table), (param,), cutoff)
        for v in variables(n):
            series = series * TruncatedSeries(1 + Poly.var(v, table) * t, (param,), cutoff)
        return series
    full, _ = build_tables(n)
    body = Poly({}, table)
    for r in range(min(n, cutoff) + 1):
        body = body + full[r].with_variables(table) * t**r
    return TruncatedSeries(body, (param,), cutoff)

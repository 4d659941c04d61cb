"""Partial fractions and mechanical derivation of deleted-product identities.

For distinct formal t_1..t_n,

    1 / prod_j (1 + x t_j) = 1 + sum_j f_j * x / (1 + x t_j)

and summing over x = x_i turns each x/(1 + x t_j) into E'(t_j)/E(t_j).
Writing E^(i)(t) = E(t)/(1 + x_i t), this gives

    F := sum_i prod_k E^(i)(t_k)
       = N prod_k E(t_k) + sum_j f_j E'(t_j) prod_{k != j} E(t_k).

With the f_j over a common denominator D, multiplying by D leaves only
polynomials.  The e_r are treated as independent symbols (e_0 included, so
every term is a product of exactly ``order`` of them), F is recovered as the
exact quotient by D, and the coefficient of prod_k t_k^(d_k - 1) is the
target sum expressed in the e_r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from symid import symfn
from symid.errors import UsageError
from symid.polycore import Poly, RationalFunction, divexact, format_terms, rf_equal

ORDERS = (2, 3)


def t_table(order: int) -> tuple:
    return tuple(f"t{j}" for j in range(1, order + 1))


def _sign(perm: Sequence[int]) -> int:
    sign, seen = 1, set()
    for start in range(len(perm)):
        if start in seen:
            continue
        k, length = start, 0
        while k not in seen:
            seen.add(k)
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def determinant(rows: Sequence[Sequence[Poly]], table: Sequence[str]) -> Poly:
    n = len(rows)
    total = Poly({}, table)
    for perm in permutations(range(n)):
        term = Poly.const(_sign(perm), table)
        for r, c in enumerate(perm):
            term = term * rows[r][c]
        total = total + term
    return total


@dataclass(frozen=True)
class PartialFractionDecomp:
    order: int
    coefficients: tuple  # f_1 .. f_order as RationalFunction in t_1..t_order

    @property
    def denominator(self) -> Poly:
        """The common denominator shared by every f_j."""
        return self.coefficients[0].den

    def defining_relation_holds(self) -> bool:
        """1/prod(1 + x t_j) == 1 + sum_j f_j x/(1 + x t_j), by cross-multiplication."""
        table = t_table(self.order) + ("x",)
        x = Poly.var("x", table)
        one = Poly.const(1, table)
        linears = [one + x * Poly.var(t, table) for t in t_table(self.order)]
        prod = one
        for lin in linears:
            prod = prod * lin
        lhs = RationalFunction(one, prod)
        rhs = RationalFunction(one, one)
        for f, lin in zip(self.coefficients, linears):
            rhs = rhs + RationalFunction(f.num.with_variables(table) * x, f.den.with_variables(table) * lin)
        return rf_equal(lhs, rhs)


@lru_cache(maxsize=None)
def partial_fractions(order: int) -> PartialFractionDecomp:
    """Solve for the f_j by clearing denominators and Cramer's rule.

    Matching powers x^m (m = 1..order) of

        1 = prod_j (1 + x t_j) + sum_j f_j x prod_{k != j} (1 + x t_k)

    gives sum_j e_{m-1}(t without t_j) f_j = -e_m(t).
    """
    if order not in ORDERS:
        raise UsageError(f"partial fractions are supported for orders {ORDERS}, got {order}")
    table = t_table(order)
    ts = [Poly.var(t, table) for t in table]
    full = symfn.elementary(ts, table)
    minors = [symfn.elementary(ts[:j] + ts[j + 1 :], table) for j in range(order)]
    matrix = [[minors[j][m - 1] for j in range(order)] for m in range(1, order + 1)]
    rhs = [-full[m] for m in range(1, order + 1)]
    den = determinant(matrix, table)
    if den.is_zero():
        raise RuntimeError("singular partial-fraction system")
    coeffs = []
    for j in range(order):
        replaced = [row[:j] + [rhs[m]] + row[j + 1 :] for m, row in enumerate(matrix)]
        coeffs.append(RationalFunction(determinant(replaced, table), den))
    decomp = PartialFractionDecomp(order, tuple(coeffs))
    if not decomp.defining_relation_holds():
        raise RuntimeError("partial-fraction solution failed verification")
    return decomp


def e_table(n: int, order: int) -> tuple:
    """Ring for the generating relation: t_1..t_order, then symbols e0..eN."""
    return t_table(order) + tuple(f"e{r}" for r in range(n + 1))


@lru_cache(maxsize=None)
def generating_quotient(n: int, order: int) -> Poly:
    """F = sum_i prod_k E^(i)(t_k) with the e_r as formal symbols."""
    decomp = partial_fractions(order)
    table = e_table(n, order)
    es = [Poly.var(f"e{r}", table) for r in range(n + 1)]
    gens, derivs = [], []
    for name in t_table(order):
        t = Poly.var(name, table)
        gens.append(sum((es[r] * t**r for r in range(n + 1)), Poly({}, table)))
        derivs.append(sum((es[r] * t ** (r - 1) * r for r in range(1, n + 1)), Poly({}, table)))

    def product(skip: int | None = None) -> Poly:
        out = Poly.const(1, table)
        for k, g in enumerate(gens):
            if k != skip:
                out = out * g
        return out

    den = decomp.denominator.with_variables(table)
    cleared = den * product() * n
    for j, f in enumerate(decomp.coefficients):
        cleared = cleared + f.num.with_variables(table) * derivs[j] * product(skip=j)
    return divexact(cleared, den)


def _canonical_key(indices) -> tuple:
    return tuple(sorted(indices, reverse=True))


@dataclass(frozen=True)
class DerivedIdentity:
    """sum_i prod_k e^(i)_{d_k - 1} = sum_key c_key prod_{r in key} e_r."""

    n: int
    degrees: tuple
    coefficients: tuple  # ((index multiset, Fraction), ...) in canonical order

    def as_dict(self) -> dict:
        return dict(self.coefficients)

    def lhs_text(self) -> str:
        return "sum_i " + "*".join(f"e{d - 1}^({'i'})" for d in self.degrees)

    def rhs_text(self) -> str:
        return format_terms(("*".join(f"e{r}" for r in key), c) for key, c in self.coefficients)

    def __str__(self) -> str:
        return f"{self.lhs_text()} = {self.rhs_text()}"

    def expand(self) -> Poly:
        """Right-hand side as a polynomial in x_1..x_N."""
        full, _ = symfn.build_tables(self.n)
        table = symfn.variables(self.n)
        total = Poly({}, table)
        for key, c in self.coefficients:
            term = Poly.const(c, table)
            for r in key:
                term = term * full[r]
            total = total + term
        return total


def canonical_coefficients(mapping: dict) -> tuple:
    merged: dict = {}
    for key, c in mapping.items():
        key = _canonical_key(key)
        merged[key] = merged.get(key, 0) + Fraction(c)
    return tuple(sorted(((k, c) for k, c in merged.items() if c), key=lambda kc: (kc[0], kc[1]), reverse=True))


def _check_degrees(n: int, degrees: Sequence[int]) -> tuple:
    degrees = tuple(int(d) for d in degrees)
    if len(degrees) not in ORDERS:
        raise UsageError(f"need {ORDERS} degrees, got {len(degrees)}")
    if not 1 <= n <= symfn.MAX_N:
        raise UsageError(f"N={n} outside 1..{symfn.MAX_N}")
    for d in degrees:
        if not 1 <= d <= n:
            raise UsageError(f"degree {d} outside 1..{n}")
    return degrees


def derive_identity(n: int, degrees: Sequence[int]) -> DerivedIdentity:
    degrees = _check_degrees(n, degrees)
    order = len(degrees)
    quotient = generating_quotient(n, order)
    target = tuple(d - 1 for d in degrees)
    found: dict = {}
    for m, c in quotient.items():
        padded = m + (0,) * (order + n + 1 - len(m))
        if padded[:order] != target:
            continue
        key = []
        for r, e in enumerate(padded[order:]):
            key.extend([r] * e)
        found[tuple(key)] = c
    return DerivedIdentity(n, degrees, canonical_coefficients(found))


def brute_force_oracle(n: int, degrees: Sequence[int]) -> Poly:
    """Direct expansion of sum_i prod_k e^(i)_{d_k - 1}."""
    degrees = tuple(int(d) for d in degrees)
    for d in degrees:
        if not 1 <= d <= n:
            raise UsageError(f"degree {d} outside 1..{n}")
    _, deleted = symfn.build_tables(n)
    table = symfn.variables(n)
    total = Poly({}, table)
    for row in deleted:
        term = Poly.const(1, table)
        for d in degrees:
            term = term * row[d - 1]
        total = total + term
    return total


def eq25_coefficients(n: int, p: int, q: int) -> tuple:
    """Closed-form coefficient list of the two-product identity (p >= q >= 2),
    with terms involving e_r, r > N, dropped since they vanish."""
    raw = {(p - 1, q - 1): n - p + 1}
    for r in range(q - 1):
        key = _canonical_key((p + q - 2 - r, r))
        raw[key] = raw.get(key, 0) - (p + q - 2 - 2 * r)
    return canonical_coefficients({k: c for k, c in raw.items() if max(k) <= n})

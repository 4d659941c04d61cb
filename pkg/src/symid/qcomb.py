"""Binomial and Gaussian binomial coefficients, and the geometric
specialization x_i = q^(i-1) of elementary symmetric functions."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from symid import symfn
from symid.errors import UsageError
from symid.polycore import Poly, format_terms


class QPoly:
    """Univariate polynomial in q with integer coefficients (index = power)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QPoly":
        if power < 0:
            raise UsageError(f"negative power of q: {power}")
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly([x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k; negative k divides and must be exact."""
        if k >= 0:
            return QPoly((0,) * k + self.coeffs) if self.coeffs else self
        if any(self.coeffs[:-k]):
            raise ArithmeticError(f"q^{-k} does not divide {self}")
        return QPoly(self.coeffs[-k:])

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero QPoly")
        rem = [Fraction(c) for c in self.coeffs]
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= c * b
        if any(c.denominator != 1 for c in quot + rem):
            raise ArithmeticError("quotient has non-integer coefficients")
        return QPoly(int(c) for c in quot), QPoly(int(c) for c in rem)

    def __call__(self, q):
        total = 0
        for c in reversed(self.coeffs):
            total = total * q + c
        return total

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly([other])
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        def mono(k: int) -> str:
            return "" if k == 0 else "q" if k == 1 else f"q^{k}"
        return format_terms((mono(k), c) for k, c in enumerate(self.coeffs) if c)

    def __repr__(self) -> str:
        return f"QPoly({str(self)!r})"


ZERO = QPoly()
ONE = QPoly([1])


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """C(n, k) by Pascal's rule; zero outside 0 <= k <= n."""
    if n < 0:
        raise UsageError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return binomial(n - 1, k - 1) + binomial(n - 1, k)


def binom(n: int, k: int) -> int:
    """Like :func:`binomial` but zero for negative ``n`` as well."""
    return 0 if n < 0 else binomial(n, k)


def q_integer(n: int) -> QPoly:
    if n < 0:
        raise UsageError(f"q-integer needs n >= 0, got {n}")
    return QPoly([1] * n)


def q_factorial(n: int) -> QPoly:
    out = ONE
    for k in range(1, n + 1):
        out = out * q_integer(k)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial by [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if n < 0:
        raise UsageError(f"q-binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


def q_binom(n: int, k: int) -> QPoly:
    """Like :func:`q_binomial` but zero for negative ``n`` as well."""
    return ZERO if n < 0 else q_binomial(n, k)


def q_binomial_ratio(n: int, k: int) -> QPoly:
    """[n]! / ([n-k]! [k]!) by exact polynomial division."""
    if k < 0 or k > n:
        return ZERO
    quot, rem = q_factorial(n).divmod(q_factorial(n - k) * q_factorial(k))
    if not rem.is_zero():
        raise ArithmeticError("factorial ratio is not a polynomial")
    return quot


def geometric_substitute(p: Poly, omit: int | None = None) -> QPoly:
    """Image of ``p`` under x_j -> q^(j-1); each monomial is a single power of q."""
    out: dict = {}
    for m, c in p.items():
        if Fraction(c).denominator != 1:
            raise UsageError("geometric substitution needs integer coefficients")
        power = sum(k * e for k, e in enumerate(m))
        out[power] = out.get(power, 0) + int(c)
    if not out:
        return ZERO
    cs = [0] * (max(out) + 1)
    for k, c in out.items():
        cs[k] = c
    return QPoly(cs)


def elem_geometric(n: int, p: int) -> QPoly:
    """e_p(1, q, ..., q^(N-1)) by substitution into the symbolic e_p."""
    if not 0 <= p <= n:
        raise UsageError(f"p={p} outside 0..{n}")
    return geometric_substitute(symfn.elem_sym(n, p))


def elem_geometric_closed(n: int, p: int) -> QPoly:
    """q^(p(p-1)/2) [N, p]."""
    if not 0 <= p <= n:
        raise UsageError(f"p={p} outside 0..{n}")
    return q_binomial(n, p).shift(p * (p - 1) // 2)


def _check_deleted(n: int, p: int, i: int) -> None:
    if not 1 <= i <= n:
        raise UsageError(f"deleted index i={i} outside 1..{n}")
    if not 1 <= p <= n:
        raise UsageError(f"p={p} outside 1..{n}")


def deleted_elem_geometric(n: int, p: int, i: int) -> QPoly:
    """e_{p-1}^(i)(1, q, ..., q^(N-1)) by direct substitution (ground truth)."""
    _check_deleted(n, p, i)
    return geometric_substitute(symfn.elem_sym_deleted(n, p - 1, i))


# Readings of the inner exponent of the deleted-sum closed form, as functions
# of (u, p, i).  Only the first survives comparison with direct substitution.
EXPONENT_READINGS: dict[str, Callable[[int, int, int], int]] = {
    "u(u-(p-i-1))": lambda u, p, i: u * (u - (p - i - 1)),
    "u(u-(p-i)-1)": lambda u, p, i: u * (u - (p - i) - 1),
    "u(u-p-i-1)": lambda u, p, i: u * (u - p - i - 1),
}

RESOLVED_EXPONENT = "u(u-(p-i-1))"


def deleted_inner_sum(n: int, p: int, i: int, reading: str = RESOLVED_EXPONENT) -> QPoly:
    """sum_u q^{exponent(u)} [N-i, u] [i-1, p-1-u], skipping vanishing terms."""
    exponent = EXPONENT_READINGS[reading]
    total = ZERO
    for u in range(p):
        a, b = q_binom(n - i, u), q_binom(i - 1, p - 1 - u)
        if a.is_zero() or b.is_zero():
            continue
        total = total + (a * b).shift(exponent(u, p, i))
    return total


def deleted_elem_geometric_closed(n: int, p: int, i: int, reading: str = RESOLVED_EXPONENT) -> QPoly:
    """Closed form q^((p-1)(p-2)/2) * inner sum, for a chosen exponent reading."""
    _check_deleted(n, p, i)
    return deleted_inner_sum(n, p, i, reading).shift((p - 1) * (p - 2) // 2)


def resolve_exponent(max_n: int = 6, readings: Sequence[str] | None = None) -> list[str]:
    """Readings whose closed form matches direct substitution for every
    N <= max_n and all valid (p, i)."""
    good = []
    for name in readings or EXPONENT_READINGS:
        try:
            ok = all(
                deleted_elem_geometric_closed(n, p, i, name) == deleted_elem_geometric(n, p, i)
                for n in range(1, max_n + 1)
                for p in range(1, n + 1)
                for i in range(1, n + 1)
            )
        except (ArithmeticError, UsageError):
            ok = False
        if ok:
            good.append(name)
    return good

"""Exact sparse multivariate polynomials over the rationals.

A :class:`Poly` maps monomials to rational coefficients.  A monomial is a
tuple of exponents indexed by position in the polynomial's variable table,
with trailing zeros stripped so that equal monomials are equal tuples::

    x1^2*x3 + 3   ->  {(2, 0, 1): 1, (): 3}     over ("x1", "x2", "x3")

Two variable tables are compatible when one is a prefix of the other; the
result of combining them uses the longer table.  Coefficients are stored as
``int`` where integral and ``Fraction`` otherwise.  All values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

from symid import kernels
from symid.errors import UsageError

Monomial = tuple
Scalar = Union[int, Fraction]


def monomial(exponents: Iterable[int]) -> Monomial:
    """Normalize an exponent sequence into a monomial key."""
    exps = list(exponents)
    if any(e < 0 for e in exps):
        raise UsageError(f"negative exponent in {exps}")
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def _scalar(c) -> Scalar:
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"not an exact rational: {c!r}")
    if isinstance(c, int):
        return int(c)
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def merge_tables(a: Sequence[str], b: Sequence[str]) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    if tuple(a[: len(b)]) != tuple(b):
        raise UsageError(f"incompatible variable tables {tuple(a)} and {tuple(b)}")
    return tuple(a)


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "variables", "_hash")

    def __init__(self, terms: Mapping | None = None, variables: Sequence[str] = ()):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise UsageError(f"repeated variable names in {self.variables}")
        out: dict = {}
        for mono, c in (terms or {}).items():
            m = monomial(mono)
            if len(m) > len(self.variables):
                raise UsageError(f"monomial {m} exceeds variable table {self.variables}")
            out[m] = out.get(m, 0) + _scalar(c)
        self._terms = {m: _scalar(c) for m, c in out.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, variables: tuple) -> "Poly":
        p = object.__new__(cls)
        p._terms = terms
        p.variables = variables
        p._hash = None
        return p

    @classmethod
    def const(cls, value, variables: Sequence[str] = ()) -> "Poly":
        return cls({(): value}, variables)

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "Poly":
        variables = tuple(variables)
        if name not in variables:
            raise UsageError(f"unknown variable {name!r}")
        k = variables.index(name)
        return cls._raw({(0,) * k + (1,): 1}, variables)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        """A copy of the term map with ``Fraction`` coefficients."""
        return {m: Fraction(c) for m, c in self._terms.items()}

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: Iterable[int]) -> Fraction:
        return Fraction(self._terms.get(monomial(mono), 0))

    def constant_term(self) -> Fraction:
        return Fraction(self._terms.get((), 0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def occurring(self) -> tuple:
        """Names of variables that actually appear."""
        used = set()
        for m in self._terms:
            used.update(k for k, e in enumerate(m) if e)
        return tuple(self.variables[k] for k in sorted(used))

    def with_variables(self, variables: Sequence[str]) -> "Poly":
        """Reinterpret over a compatible (longer or equal) table."""
        return Poly._raw(self._terms, merge_tables(self.variables, variables))

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return Poly.const(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()}, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        table = merge_tables(self.variables, other.variables)
        return Poly._raw(kernels.add_terms(self._terms, other._terms, -1), table)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise UsageError("exponent must be a non-negative integer")
        result = Poly.const(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        c = _scalar(c)
        if not c:
            return Poly._raw({}, self.variables)
        return Poly._raw({m: _scalar(v * c) for m, v in self._terms.items()}, self.variables)

    def diff(self, name: str) -> "Poly":
        """Partial derivative with respect to ``name``."""
        if name not in self.variables:
            raise UsageError(f"unknown variable {name!r}")
        k = self.variables.index(name)
        out = {}
        for m, c in self._terms.items():
            if k < len(m) and m[k]:
                e = m[k]
                out[monomial(m[:k] + (e - 1,) + m[k + 1 :])] = c * e
        return Poly._raw(out, self.variables)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({render(self)!r}, variables={self.variables})"

    def __str__(self) -> str:
        return render(self)


def poly_add(a: Poly, b: Poly) -> Poly:
    table = merge_tables(a.variables, b.variables)
    if not b._terms:
        return Poly._raw(a._terms, table)
    if not a._terms:
        return Poly._raw(b._terms, table)
    return Poly._raw(kernels.add_terms(a._terms, b._terms), table)


def poly_mul(a: Poly, b: Poly) -> Poly:
    table = merge_tables(a.variables, b.variables)
    return Poly._raw(kernels.mul_terms(a._terms, b._terms), table)


def poly_sum(polys: Iterable[Poly], variables: Sequence[str] = ()) -> Poly:
    total = Poly._raw({}, tuple(variables))
    for p in polys:
        total = total + p
    return total


def evaluate(p: Poly, assignment: Mapping[str, object]) -> Fraction:
    """Exact value of ``p`` at a (partial) assignment covering its variables."""
    missing = [v for v in p.occurring() if v not in assignment]
    if missing:
        raise UsageError(f"assignment is missing {missing}")
    values = [Fraction(_scalar(assignment[v])) if v in assignment else None for v in p.variables]
    total = Fraction(0)
    for m, c in p.items():
        term = Fraction(c)
        for k, e in enumerate(m):
            if e:
                term *= values[k] ** e
        total += term
    return total


def substitute(p: Poly, images: Mapping[str, Poly], variables: Sequence[str]) -> Poly:
    """Replace variables by polynomials over ``variables``.

    Variables of ``p`` without an image must also be in ``variables`` and
    are kept as they are.
    """
    variables = tuple(variables)
    gens = []
    for name in p.variables:
        if name in images:
            gens.append(images[name].with_variables(variables))
        elif name in variables:
            gens.append(Poly.var(name, variables))
        else:
            gens.append(None)
    powers: dict = {}
    total = Poly._raw({}, variables)
    for m, c in p.items():
        term = Poly.const(c, variables)
        for k, e in enumerate(m):
            if not e:
                continue
            if gens[k] is None:
                raise UsageError(f"no image for variable {p.variables[k]!r}")
            key = (k, e)
            if key not in powers:
                powers[key] = gens[k] ** e
            term = term * powers[key]
        total = total + term
    return total


def divexact(a: Poly, b: Poly) -> Poly:
    """Quotient ``a / b``; raises ``ArithmeticError`` unless ``b`` divides ``a``.

    Uses leading-term reduction in lex order, which terminates with a zero
    remainder exactly when the division is exact.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    table = merge_tables(a.variables, b.variables)
    lead_b = max(b._terms)
    lead_c = b._terms[lead_b]
    rem = dict(a._terms)
    quot: dict = {}
    while rem:
        lead = max(rem)
        diff = [x - y for x, y in zip(lead, lead_b + (0,) * (len(lead) - len(lead_b)))]
        if len(lead_b) > len(lead) or any(d < 0 for d in diff):
            raise ArithmeticError("polynomial division is not exact")
        qm = monomial(diff)
        qc = _scalar(Fraction(rem[lead]) / lead_c)
        quot[qm] = qc
        rem = kernels.add_terms(rem, kernels.mul_terms({qm: qc}, b._terms), -1)
    return Poly._raw(quot, table)


# -- rendering --------------------------------------------------------------

def _grlex_key(m: Monomial):
    return (sum(m), m)


def _format_monomial(m: Monomial, variables: Sequence[str]) -> str:
    parts = []
    for k, e in enumerate(m):
        if e == 1:
            parts.append(variables[k])
        elif e:
            parts.append(f"{variables[k]}^{e}")
    return "*".join(parts)


def format_terms(pairs: Iterable[tuple[str, Scalar]]) -> str:
    """Join ``(monomial text, coefficient)`` pairs as ``a*m + b*n - ...``."""
    out = []
    for text, c in pairs:
        c = Fraction(c)
        mag = abs(c)
        if not text:
            body = str(mag)
        elif mag == 1:
            body = text
        else:
            body = f"{mag}*{text}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out) if out else "0"


def render(p: Poly) -> str:
    """Canonical text: graded-lex descending, ``*`` products, ``^`` powers."""
    ordered = sorted(p.items(), key=lambda mc: _grlex_key(mc[0]), reverse=True)
    return format_terms((_format_monomial(m, p.variables), c) for m, c in ordered)


# -- truncated series ---------------------------------------------------------

class TruncatedSeries:
    """Polynomial in designated formal parameters, truncated at total degree
    ``cutoff`` in those parameters."""

    __slots__ = ("body", "formal", "cutoff", "_positions")

    def __init__(self, body: Poly, formal: Sequence[str], cutoff: int):
        if cutoff < 0:
            raise UsageError("cutoff must be non-negative")
        formal = tuple(formal)
        for name in formal:
            if name not in body.variables:
                raise UsageError(f"formal parameter {name!r} not in {body.variables}")
        self.formal = formal
        self.cutoff = cutoff
        self._positions = tuple(body.variables.index(n) for n in formal)
        keep = {
            m: c
            for m, c in body.items()
            if sum(m[k] for k in self._positions if k < len(m)) <= cutoff
        }
        self.body = Poly._raw(keep, body.variables)

    def _check(self, other: "TruncatedSeries") -> None:
        if self.formal != other.formal:
            raise UsageError("series have different formal parameters")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.body + other.body, self.formal, min(self.cutoff, other.cutoff))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.body - other.body, self.formal, min(self.cutoff, other.cutoff))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.body, self.formal, self.cutoff)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other, min(self.cutoff, other.cutoff))
        if isinstance(other, Poly):
            return series_mul(self, TruncatedSeries(other, self.formal, self.cutoff), self.cutoff)
        if isinstance(other, Rational):
            return TruncatedSeries(self.body.scale(other), self.formal, self.cutoff)
        return NotImplemented

    __rmul__ = __mul__

    def diff(self, name: str) -> "TruncatedSeries":
        """Derivative; in a formal parameter the result loses one order."""
        cutoff = self.cutoff - 1 if name in self.formal else self.cutoff
        return TruncatedSeries(self.body.diff(name), self.formal, max(cutoff, 0))

    def coefficient(self, powers: Mapping[str, int]) -> Poly:
        """Coefficient of the formal monomial given by ``powers``."""
        want = [powers.get(n, 0) for n in self.formal]
        out = {}
        for m, c in self.body.items():
            got = [m[k] if k < len(m) else 0 for k in self._positions]
            if got == want:
                rest = list(m)
                for k in self._positions:
                    if k < len(rest):
                        rest[k] = 0
                out[monomial(rest)] = c
        return Poly._raw(out, self.body.variables)

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.formal == other.formal and self.cutoff == other.cutoff and self.body == other.body

    __hash__ = None

    def __str__(self) -> str:
        return f"{render(self.body)} + O(deg {self.cutoff + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({render(self.body)!r}, formal={self.formal}, cutoff={self.cutoff})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries, cutoff: int) -> TruncatedSeries:
    if cutoff < 0:
        raise UsageError("cutoff must be non-negative")
    a._check(b)
    if cutoff > min(a.cutoff, b.cutoff):
        raise UsageError("cutoff exceeds the precision of the factors")
    table = merge_tables(a.body.variables, b.body.variables)
    positions = tuple(table.index(n) for n in a.formal)
    terms = kernels.mul_terms_truncated(a.body._terms, b.body._terms, positions, cutoff)
    return TruncatedSeries(Poly._raw(terms, table), a.formal, cutoff)


# -- rational functions -------------------------------------------------------

class RationalFunction:
    """Unreduced quotient of two polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise UsageError("zero denominator")
        self.num = num
        self.den = den

    def __add__(self, other):
        if isinstance(other, Poly):
            other = RationalFunction(other, Poly.const(1, other.variables))
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return RationalFunction(self.num * other, self.den)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def swap(self, mapping: Mapping[str, str]) -> "RationalFunction":
        """Rename variables (e.g. exchange ``t1`` and ``t2``)."""
        def rename(p: Poly) -> Poly:
            images = {a: Poly.var(b, p.variables) for a, b in mapping.items()}
            return substitute(p, images, p.variables)
        return RationalFunction(rename(self.num), rename(self.den))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return rf_equal(self, other)

    __hash__ = None

    def __str__(self) -> str:
        return f"({render(self.num)})/({render(self.den)})"

    __repr__ = __str__


def rf_equal(a: RationalFunction, b: RationalFunction) -> bool:
    """Decide ``a == b`` by cross-multiplication."""
    if a.den.is_zero() or b.den.is_zero():
        raise UsageError("zero denominator")
    return (a.num * b.den - b.num * a.den).is_zero()

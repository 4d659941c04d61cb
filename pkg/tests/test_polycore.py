from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import VARS4, small_polys
from symid import UsageError
from symid.polycore import (
    Poly,
    RationalFunction,
    TruncatedSeries,
    divexact,
    evaluate,
    monomial,
    poly_add,
    poly_mul,
    render,
    rf_equal,
    series_mul,
    substitute,
)


def test_add_cancellation(x3):
    x1, x2, _ = x3
    assert poly_add(x1 + x2, x1 - x2) == 2 * x1
    assert render(poly_add(x1 + x2, x1 - x2)) == "2*x1"


def test_add_zero_identity(x3):
    x1, x2, x3_ = x3
    p = x1 * x2 - 3 * x3_ + 1
    assert poly_add(p, Poly({}, p.variables)) == p


def test_add_hand_expansion(x3):
    x1, x2, _ = x3
    out = poly_add(x1 * x2 + 1, x1 * x2)
    assert out.terms == {(1, 1): 2, (): 1}
    assert render(out) == "2*x1*x2 + 1"


def test_zero_coefficients_purged(x3):
    x1, x2, _ = x3
    assert (x1 - x1).terms == {}
    assert len((x1 + x2) - x2) == 1


def test_mul_examples(x3):
    x1, x2, _ = x3
    assert poly_mul(1 + x1, 1 + x2) == 1 + x1 + x2 + x1 * x2
    p = x1 * x2 + 5
    assert poly_mul(p, Poly.const(1, p.variables)) == p
    assert poly_mul(x1 + x2, x1 + x2).terms == {(2,): 1, (1, 1): 2, (0, 2): 1}


def test_incompatible_tables():
    a = Poly.var("x1", ("x1", "x2"))
    b = Poly.var("y", ("y",))
    with pytest.raises(UsageError):
        poly_add(a, b)
    with pytest.raises(UsageError):
        poly_mul(a, b)


def test_prefix_tables_combine():
    a = Poly.var("x1", ("x1",))
    b = Poly.var("x2", ("x1", "x2"))
    assert (a + b).variables == ("x1", "x2")


def test_monomial_normalizes_trailing_zeros():
    assert monomial([1, 0, 0]) == (1,)
    assert monomial([0, 0]) == ()
    assert Poly({(1, 0, 0): 2}, ("a", "b", "c")) == Poly({(1,): 2}, ("a", "b", "c"))


def test_series_mul_truncates():
    table = ("t",)
    t = Poly.var("t", table)
    one_t = TruncatedSeries(1 + t, ("t",), 1)
    assert series_mul(one_t, one_t, 1).body == 1 + 2 * t


def test_series_mul_identity():
    table = ("e1", "t")
    e1, t = Poly.var("e1", table), Poly.var("t", table)
    s = TruncatedSeries(1 + e1 * t, ("t",), 3)
    assert series_mul(s, TruncatedSeries(Poly.const(1, table), ("t",), 3), 3).body == 1 + e1 * t


def test_series_mul_bivariate():
    table = ("t1", "t2")
    t1, t2 = (Poly.var(v, table) for v in table)
    a = TruncatedSeries(1 + t1, table, 2)
    b = TruncatedSeries(1 + t2, table, 2)
    assert series_mul(a, b, 2).body == 1 + t1 + t2 + t1 * t2


def test_series_negative_cutoff():
    s = TruncatedSeries(Poly.var("t", ("t",)), ("t",), 1)
    with pytest.raises(UsageError):
        series_mul(s, s, -1)


def test_evaluate_examples(x3):
    x1, x2, x3_ = x3
    e2 = x1 * x2 + x1 * x3_ + x2 * x3_
    point = {"x1": 1, "x2": 2, "x3": 3}
    from itertools import combinations

    expected = sum(point[a] * point[b] for a, b in combinations(sorted(point), 2))
    assert expected == 11
    assert evaluate(e2, point) == 11
    assert evaluate(x1 + x2 + x3_, {"x1": 1, "x2": 1, "x3": 1}) == 3


def test_evaluate_zero_gives_constant(x3):
    x1, x2, _ = x3
    p = 3 * x1 * x2 - x2 + Fraction(7, 2)
    assert evaluate(p, {"x1": 0, "x2": 0, "x3": 0}) == Fraction(7, 2)


def test_evaluate_missing_variable(x3):
    x1, x2, _ = x3
    with pytest.raises(UsageError):
        evaluate(x1 * x2, {"x1": 1})


def test_rf_equal_examples():
    table = ("t1", "t2")
    t1, t2 = (Poly.var(v, table) for v in table)
    assert rf_equal(RationalFunction(t1**2, t1 - t2), RationalFunction(t1**2, t1 - t2))
    assert not rf_equal(RationalFunction(t1, t1 - t2), RationalFunction(t2, t1 - t2))
    t = Poly.var("t", ("t",))
    assert rf_equal(RationalFunction(Poly.const(1, ("t",)), 1 + t), RationalFunction(1 - t, 1 - t**2))


def test_rf_zero_denominator():
    with pytest.raises(UsageError):
        RationalFunction(Poly.const(1), Poly({}))


def test_render_grlex():
    table = ("x1", "x2", "x3")
    x1, x2, x3 = (Poly.var(v, table) for v in table)
    p = x3 + x1 * x2 - 2 * x1**2 + Fraction(1, 2) + x2**3
    assert render(p) == "x2^3 - 2*x1^2 + x1*x2 + x3 + 1/2"
    assert render(Poly({}, table)) == "0"
    assert render(-x1) == "-x1"


def test_divexact():
    table = ("a", "b")
    a, b = (Poly.var(v, table) for v in table)
    assert divexact((a - b) * (a + 2 * b) ** 2, a + 2 * b) == (a - b) * (a + 2 * b)
    with pytest.raises(ArithmeticError):
        divexact(a + 1, a - b)


def test_substitute():
    table = ("x1", "x2")
    x1, x2 = (Poly.var(v, table) for v in table)
    p = Poly({(2,): 1, (0, 1): 3}, ("e1", "e2"))
    assert substitute(p, {"e1": x1 + x2, "e2": x1 * x2}, table) == (x1 + x2) ** 2 + 3 * x1 * x2


def test_diff():
    table = ("x", "t")
    x, t = (Poly.var(v, table) for v in table)
    assert (x**3 * t + x * t**2).diff("x") == 3 * x**2 * t + t**2


# -- properties ---------------------------------------------------------------

@given(small_polys(), small_polys(), small_polys())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(small_polys(), small_polys(), st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), min_size=4, max_size=4))
@settings(max_examples=60, deadline=None)
def test_evaluate_is_multiplicative(p, q, values):
    point = dict(zip(VARS4, values))
    assert evaluate(p * q, point) == evaluate(p, point) * evaluate(q, point)


@given(small_polys())
def test_canonical_form_idempotent(p):
    once = Poly(p.terms, p.variables)
    assert Poly(once.terms, once.variables) == once
    assert once.terms == p.terms
    assert all(c != 0 for c in once.terms.values())


@given(small_polys(), small_polys().filter(lambda q: not q.is_zero()))
@settings(max_examples=40, deadline=None)
def test_divexact_inverts_mul(p, q):
    assert divexact(p * q, q) == p


@given(small_polys(), small_polys())
@settings(max_examples=40, deadline=None)
def test_mul_matches_sympy(p, q):
    import sympy

    def to_sympy(poly):
        syms = sympy.symbols(VARS4)
        expr = 0
        for m, c in poly.items():
            term = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(c)
            for k, e in enumerate(m):
                term *= syms[k] ** e
            expr += term
        return sympy.expand(expr)

    assert sympy.expand(to_sympy(p) * to_sympy(q) - to_sympy(p * q)) == 0

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from symid.polycore import Poly

VARS4 = ("x1", "x2", "x3", "x4")


@st.composite
def small_polys(draw, variables=VARS4, max_degree=4, max_terms=6):
    n = draw(st.integers(1, len(variables)))
    table = variables[:n]
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = draw(st.lists(st.integers(0, max_degree), min_size=n, max_size=n).filter(lambda e: sum(e) <= max_degree))
        num = draw(st.integers(-9, 9))
        den = draw(st.sampled_from([1, 1, 1, 2, 3]))
        terms[tuple(exps)] = Fraction(num, den)
    return Poly(terms, table)


@pytest.fixture
def x3():
    table = ("x1", "x2", "x3")
    return tuple(Poly.var(v, table) for v in table)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

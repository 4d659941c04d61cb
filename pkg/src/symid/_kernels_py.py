"""Pure-Python sparse term kernels.

Terms are dicts mapping monomials to coefficients.  A monomial is a tuple of
exponents with trailing zeros stripped, so ``(2, 0, 1)`` is ``x1^2*x3`` and
``()`` is the constant monomial.  Coefficients are ``int`` or ``Fraction``.
"""

from itertools import zip_longest


def mono_mul(a, b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    return tuple(x + y for x, y in zip_longest(a, b, fillvalue=0))


def formal_degree(mono, positions):
    n = len(mono)
    return sum(mono[k] for k in positions if k < n)


def add_terms(a, b, scale=1):
    """Return ``a + scale*b`` with zero coefficients purged."""
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + scale * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def mul_terms(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for mb, cb in b.items():
        for ma, ca in a.items():
            m = mono_mul(ma, mb)
            out[m] = get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def mul_terms_truncated(a, b, positions, cutoff):
    """Product of ``a`` and ``b`` keeping monomials whose degree in the
    variables at ``positions`` is at most ``cutoff``."""
    da = [(formal_degree(m, positions), m, c) for m, c in a.items()]
    db = [(formal_degree(m, positions), m, c) for m, c in b.items()]
    db.sort(key=lambda item: item[0])
    out = {}
    get = out.get
    for ka, ma, ca in da:
        room = cutoff - ka
        if room < 0:
            continue
        for kb, mb, cb in db:
            if kb > room:
                break
            m = mono_mul(ma, mb)
            out[m] = get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}

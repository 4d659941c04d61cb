"""Compare the compiled and pure-Python sparse kernels.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

from symid import _kernels_py, symfn
from symid.polycore import Poly

try:
    from symid import _kernels_c
except ImportError:
    _kernels_c = None


def workloads():
    full, deleted = symfn.build_tables(10)
    e3, e5 = full[3]._terms, full[5]._terms
    yield "e3*e5, N=10", lambda k: k.mul_terms(e3, e5)

    table = ("x1", "x2", "x3", "x4", "t")
    s = sum((Poly.var(v, table) for v in table), Poly({}, table)) ** 4
    yield "(x1+..+x4+t)^4 squared", lambda k: k.mul_terms(s._terms, s._terms)

    pos = (4,)
    yield "same, truncated at t^3", lambda k: k.mul_terms_truncated(s._terms, s._terms, pos, 3)

    big = (s * 10**30)._terms
    yield "big coefficients", lambda k: k.mul_terms(big, s._terms)

    row = deleted[0]
    a, b = row[4]._terms, row[4]._terms
    yield "deleted e4^(1) squared, N=10", lambda k: k.mul_terms(a, b)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _kernels_c is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`")
    print(f"{'workload':32s} {'python ms':>10s} {'compiled ms':>12s} {'speedup':>8s}")
    for name, fn in workloads():
        t_py = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=args.repeat))
        if _kernels_c is None:
            print(f"{name:32s} {t_py * 1e3:10.2f}")
            continue
        assert fn(_kernels_c) == fn(_kernels_py)
        t_c = min(timeit.repeat(lambda: fn(_kernels_c), number=1, repeat=args.repeat))
        print(f"{name:32s} {t_py * 1e3:10.2f} {t_c * 1e3:12.2f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()

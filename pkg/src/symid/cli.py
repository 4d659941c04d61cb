"""Command-line front end: ``symid verify | derive | table``.

Exit codes: 0 when everything checked passes, 1 when any check fails,
2 on usage errors.  Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from symid import qcomb, symfn
from symid.errors import UsageError
from symid.identities import derive
from symid.identities.catalog import CATALOG
from symid.identities.grid import default_workers, expand_grid, run_grid, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
RANGE_PARAMS = ("p", "q", "r", "i", "cutoff")
_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_range(text: str) -> range:
    """``a..b`` (inclusive) or a single non-negative integer."""
    match = _RANGE.match(text)
    if not match:
        raise UsageError(f"bad range {text!r}; expected a or a..b")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _identities(spec: str) -> list:
    if spec == "all":
        return list(CATALOG)
    names = [s.strip() for s in spec.split(",") if s.strip()]
    unknown = [s for s in names if s not in CATALOG]
    if unknown or not names:
        raise UsageError(f"unknown identity {', '.join(unknown) or spec!r}; known: {', '.join(CATALOG)}, all")
    return names


def _workers(args) -> int:
    if args.workers is not None:
        if args.workers < 1:
            raise UsageError("--workers must be positive")
        return args.workers
    return default_workers()


def cmd_verify(args) -> int:
    names = _identities(args.identity)
    n_values = parse_range(args.n)
    ranges = {k: parse_range(getattr(args, k)) for k in RANGE_PARAMS if getattr(args, k) is not None}
    jobs = []
    for name in names:
        accepted = {k: v for k, v in ranges.items() if k in CATALOG[name].params}
        if len(names) == 1:
            accepted = ranges
        jobs.extend(expand_grid(name, n_values, accepted))
    started = time.perf_counter()
    reports = run_grid(jobs, _workers(args))
    wall = time.perf_counter() - started
    summary = summarize(reports)
    summary["failed"] = [r.label() for r in reports if not r.passed]

    if args.format == "json":
        config = {
            "command": "verify",
            "identities": names,
            "n": args.n,
            "ranges": {k: getattr(args, k) for k in RANGE_PARAMS if getattr(args, k) is not None},
        }
        payload = {"config": config, "instances": [r.to_json() for r in reports], "summary": summary}
        print(dump_json(payload))
    else:
        for r in reports:
            line = f"{r.verdict.upper()} {r.label()}"
            if r.diff is not None:
                line += f"  diff (rhs - lhs): {r.diff}"
            if r.note is not None and not r.passed:
                line += f"  [{r.note}]"
            print(line)
        print(f"summary: {summary['total']} instances, {summary['passes']} passed, {summary['failures']} failed")
    print(f"wall time {wall:.3f} s", file=sys.stderr)
    return EXIT_OK if summary["failures"] == 0 else EXIT_FAIL


def _parse_degrees(text: str) -> tuple:
    try:
        return tuple(int(s) for s in text.split(","))
    except ValueError:
        raise UsageError(f"bad degree list {text!r}; expected e.g. 2,2 or 3,2,2") from None


def cmd_derive(args) -> int:
    degrees = _parse_degrees(args.degrees)
    derived = derive.derive_identity(args.n, degrees)
    verified = derived.expand() == derive.brute_force_oracle(args.n, degrees)
    if args.format == "json":
        payload = {
            "config": {"command": "derive", "n": args.n, "degrees": list(degrees)},
            "identity": {
                "N": args.n,
                "degrees": list(degrees),
                "coefficients": [{"e": list(key), "coeff": str(c)} for key, c in derived.coefficients],
                "text": str(derived),
            },
            "oracle": "verified" if verified else "mismatch",
        }
        print(dump_json(payload))
    else:
        print(f"N={args.n} degrees={','.join(map(str, degrees))}")
        print(str(derived))
        for key, c in derived.coefficients:
            print(f"  {'*'.join(f'e{r}' for r in key)}: {c}")
        print(f"oracle: {'verified' if verified else 'MISMATCH'}")
    return EXIT_OK if verified else EXIT_FAIL


def _table_rows(kind: str, n: int, i: int | None) -> list:
    if not 0 <= n <= symfn.MAX_N:
        raise UsageError(f"N={n} outside 0..{symfn.MAX_N}")
    if kind == "qbinom":
        return [(f"[{n},{k}]", str(qcomb.q_binomial(n, k))) for k in range(n + 1)]
    if n < 1:
        raise UsageError(f"table {kind} needs N >= 1")
    if kind == "esym":
        return [(f"e{r}", str(symfn.elem_sym(n, r))) for r in range(n + 1)]
    if kind == "psum":
        return [(f"p{r}", str(symfn.power_sum(n, r))) for r in range(1, n + 1)]
    if kind == "deleted":
        if i is None:
            raise UsageError("table deleted needs --i")
        return [(f"e{r}^({i})", str(symfn.elem_sym_deleted(n, r, i))) for r in range(n)]
    if kind == "geometric":
        return [(f"e{r}(1,q,...)", str(qcomb.elem_geometric(n, r))) for r in range(n + 1)]
    raise UsageError(f"unknown table {kind!r}")


def cmd_table(args) -> int:
    rows = _table_rows(args.kind, args.n, args.i)
    if args.format == "json":
        payload = {
            "config": {"command": "table", "kind": args.kind, "n": args.n},
            "rows": [{"name": name, "value": value} for name, value in rows],
        }
        if args.i is not None:
            payload["config"]["i"] = args.i
        print(dump_json(payload))
    else:
        for name, value in rows:
            print(f"{name} = {value}")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    verify = sub.add_parser("verify", help="check identities over a parameter grid")
    verify.add_argument("--identity", required=True, help=f"one of {', '.join(CATALOG)}, a comma list, or all")
    verify.add_argument("--n", required=True, help="N or a..b")
    for name in RANGE_PARAMS:
        verify.add_argument(f"--{name}", help=f"{name} or a..b (default: every valid value)")
    verify.add_argument("--workers", type=int, help="worker processes (default: $SYMID_WORKERS or CPU count)")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=cmd_verify)

    der = sub.add_parser("derive", help="derive a deleted-product identity and check it by brute force")
    der.add_argument("--n", type=int, required=True)
    der.add_argument("--degrees", required=True, help="comma list of 2 or 3 degrees, e.g. 3,2,2")
    der.add_argument("--format", choices=("text", "json"), default="text")
    der.set_defaults(func=cmd_derive)

    table = sub.add_parser("table", help="print q-binomial or symmetric-function tables")
    table.add_argument("kind", choices=("qbinom", "esym", "deleted", "psum", "geometric"))
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--i", type=int, help="deleted index for the deleted table")
    table.add_argument("--format", choices=("text", "json"), default="text")
    table.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"symid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

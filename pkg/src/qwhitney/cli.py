"""Command-line front door.

Subcommands: table, value, star, dowling, hankel, verify, eval.  Laurent
polynomial values are emitted as sorted [exponent, coefficient-string]
pairs, so output is bit-identical across runs.  Exit codes: 0 success or
all identities pass, 1 identity failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import verify
from .hankel import HankelSpec, det_exact, hankel_closed_form, hankel_matrix
from .qcore import LaurentPoly, eval_q
from .whitney import WhitneyParams, r_dowling, w, w_star, w_table


def _params(args) -> WhitneyParams:
    return WhitneyParams(args.m, args.r)


def _parse_q(text: str) -> Fraction:
    q = Fraction(text)
    if q == 0:
        raise ValueError("q must be nonzero")
    return q


def _render(value: LaurentPoly, qval):
    if qval is None:
        return value.to_pairs()
    return str(eval_q(value, qval))


def _emit_value(out, value: LaurentPoly, qval):
    print(json.dumps(_render(value, qval)), file=out)


def cmd_table(args, out) -> int:
    table = w_table(_params(args), args.nmax)
    qval = args.q_eval
    if args.format == "json":
        doc = {"params": {"m": args.m, "r": args.r},
               "rows": [[_render(v, qval) for v in row]
                        for row in table.entries]}
        print(json.dumps(doc), file=out)
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "k", "value"])
        for n, row in enumerate(table.entries):
            for k, v in enumerate(row):
                cell = json.dumps(_render(v, qval)) if qval is None else _render(v, qval)
                writer.writerow([n, k, cell])
    return 0


def cmd_value(args, out) -> int:
    _emit_value(out, w(_params(args), args.n, args.k), args.q_eval)
    return 0


def cmd_star(args, out) -> int:
    _emit_value(out, w_star(_params(args), args.n, args.k), args.q_eval)
    return 0


def cmd_dowling(args, out) -> int:
    _emit_value(out, r_dowling(_params(args), args.n), args.q_eval)
    return 0


def cmd_eval(args, out) -> int:
    value = w_star(_params(args), args.n, args.k) if args.star \
        else w(_params(args), args.n, args.k)
    print(str(eval_q(value, args.q)), file=out)
    return 0


def cmd_hankel(args, out) -> int:
    spec = HankelSpec(_params(args), args.s, args.n)
    mat = hankel_matrix(spec)
    det = det_exact(mat)
    closed = hankel_closed_form(spec)
    qval = args.q_eval
    doc = {
        "params": {"m": args.m, "r": args.r, "s": args.s, "n": args.n},
        "matrix": [[_render(v, qval) for v in row] for row in mat.entries],
        "determinant": _render(det, qval),
        "closed_form": _render(closed, qval),
        "status": "PASS" if det == closed else "FAIL",
    }
    print(json.dumps(doc), file=out)
    return 0 if det == closed else 1


def cmd_verify(args, out) -> int:
    grid = None
    if args.grid:
        with open(args.grid) as fh:
            grid = json.load(fh)
    results = verify.run_suite(args.suite, grid)
    all_ok = True
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        print(f"{res.suite}: {status} ({res.cells - len(res.failures)}/{res.cells} cells)",
              file=out)
        all_ok = all_ok and res.ok
    report = {"suite": args.suite,
              "cells": sum(r.cells for r in results),
              "failures": [f.to_json() for r in results for f in r.failures]}
    print(json.dumps(report), file=out)
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwhitney",
        description="Exact q-analogue r-Whitney numbers of the second kind.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mr(p):
        p.add_argument("--m", type=int, required=True, help="Dowling parameter (>= 1)")
        p.add_argument("--r", type=int, required=True, help="shift parameter (>= 0)")

    def add_qeval(p):
        p.add_argument("--q-eval", type=_parse_q, default=None, metavar="P/Q",
                       help="evaluate at the exact rational q")

    p = sub.add_parser("table", help="emit the full triangle up to nmax")
    add_mr(p)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    add_qeval(p)
    p.set_defaults(fn=cmd_table)

    for name, fn in (("value", cmd_value), ("star", cmd_star)):
        p = sub.add_parser(name, help=f"single {'normalized ' if name == 'star' else ''}value")
        add_mr(p)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        add_qeval(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("dowling", help="row sum (q-analogue r-Dowling number)")
    add_mr(p)
    p.add_argument("--n", type=int, required=True)
    add_qeval(p)
    p.set_defaults(fn=cmd_dowling)

    p = sub.add_parser("eval", help="exact rational evaluation of one value")
    add_mr(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=_parse_q, required=True, metavar="P/Q")
    p.add_argument("--star", action="store_true", help="evaluate the normalized value")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("hankel", help="Hankel matrix, determinant, closed form")
    add_mr(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_qeval(p)
    p.set_defaults(fn=cmd_hankel)

    p = sub.add_parser("verify", help="run an identity verification suite")
    p.add_argument("--suite", choices=verify.SUITES, required=True)
    p.add_argument("--grid", default=None, help="JSON grid config file")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        if hasattr(args, "n") and args.command != "hankel" and args.n < 0:
            raise ValueError("n must be >= 0")
        if hasattr(args, "k") and args.k < 0:
            raise ValueError("k must be >= 0")
        return args.fn(args, out)
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

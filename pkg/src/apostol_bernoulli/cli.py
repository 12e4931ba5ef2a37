"""Command-line interface.

    apostol-bernoulli stirling --n-max 6
    apostol-bernoulli bell --n 4 --k 2 --x 1,1,1
    apostol-bernoulli bernoulli --n-max 10 --format csv
    apostol-bernoulli apostol --n 3 [--numbers] [--z 2 --u 1/3] [--formula closed]
    apostol-bernoulli verify --n-max 8

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
All numbers are printed as exact ``p/q`` rationals.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import apostol as ap
from . import classical as cl
from . import verify as vf
from .combinatorics import bell_partial, stirling2_table
from .core.poleform import format_poleform
from .core.poly import format_poly
from .core.rational import format_rat, parse_rat
from .core.serialize import abpoly_to_json, poleform_to_json, poly_to_json

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _rational(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    parser = _Parser(prog="apostol-bernoulli", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stirling", parents=[common], help="table of S(n, k)")
    p.add_argument("--n-max", type=_nonneg_int, required=True)

    p = sub.add_parser("bell", parents=[common], help="partial Bell polynomial value")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--k", type=_nonneg_int, required=True)
    p.add_argument("--x", help="comma-separated rationals x_1..x_{n-k+1} (default all ones)")

    p = sub.add_parser("bernoulli", parents=[common], help="classical Bernoulli table")
    p.add_argument("--n-max", type=_nonneg_int, required=True)
    p.add_argument("--poly", action="store_true", help="polynomials B_n(u) instead of numbers")

    p = sub.add_parser("apostol", parents=[common], help="Apostol-Bernoulli B_n(u,z)")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--numbers", action="store_true", help="B_n(z) = B_n(0,z) only")
    p.add_argument("--formula", help="restrict to one formula")
    p.add_argument("--z", type=_rational, help="evaluate at this rational z (z != 1)")
    p.add_argument("--u", type=_rational, default=None, help="evaluate at this rational u")

    p = sub.add_parser("verify", parents=[common], help="run the cross-formula lattice")
    p.add_argument("--n-max", type=_nonneg_int, default=None,
                   help=f"index bound (default {vf.DEFAULT_POLY_N_MAX} for polynomials, "
                        f"{vf.DEFAULT_NUM_N_MAX} for numbers)")
    p.add_argument("--seed", type=int, default=0)
    return parser


# -- document builders -------------------------------------------------------
# Each returns (exit status, text).


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_stirling(args):
    table = stirling2_table(args.n_max)
    if args.format == "json":
        return EXIT_OK, _dump_json({"n_max": args.n_max, "rows": [list(r) for r in table.values]})
    if args.format == "csv":
        rows = [(n, k, table(n, k)) for n in range(args.n_max + 1) for k in range(n + 1)]
        return EXIT_OK, _dump_csv(("n", "k", "S"), rows)
    lines = [f"{n}: " + " ".join(str(v) for v in table.row(n)) for n in range(args.n_max + 1)]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_bell(args):
    if args.k > args.n:
        raise UsageError(f"need n >= k, got n={args.n}, k={args.k}")
    width = args.n - args.k + 1
    if args.x:
        try:
            x = [parse_rat(t) for t in args.x.split(",")]
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(str(exc)) from None
    else:
        x = [Fraction(1)] * width
    if len(x) != width:
        raise UsageError(f"--x needs {width} values for n={args.n}, k={args.k}, got {len(x)}")
    value = Fraction(bell_partial(args.n, args.k, x))
    if args.format == "json":
        return EXIT_OK, _dump_json({"n": args.n, "k": args.k,
                                    "x": [format_rat(v) for v in x], "value": format_rat(value)})
    if args.format == "csv":
        return EXIT_OK, _dump_csv(("n", "k", "value"), [(args.n, args.k, format_rat(value))])
    return EXIT_OK, f"B_{{{args.n},{args.k}}} = {format_rat(value)}\n"


def _classical_rows(n_max):
    rec = cl.bern_recurrence(n_max)
    ser = cl.bern_oracle_series(n_max)
    rows = []
    for n in range(n_max + 1):
        vals = {"recurrence": rec[n], "series": Fraction(ser[n].evaluate(0))}
        if n >= 1:
            vals.update(jks=cl.bern_num_jks(n), qc=cl.bern_num_qc(n), det=cl.bern_num_det(n))
        rows.append((n, vals))
    return rows


def cmd_bernoulli(args):
    if args.poly:
        return _bernoulli_poly(args)
    cols = ("jks", "qc", "det", "recurrence", "series")
    table = _classical_rows(args.n_max)
    records = []
    for n, vals in table:
        agree = len(set(vals.values())) == 1
        records.append((n, {c: (format_rat(vals[c]) if c in vals else "") for c in cols}, agree))
    if args.format == "json":
        doc = [{"n": n, "values": {c: v for c, v in cells.items() if v}, "agreement": agree}
               for n, cells, agree in records]
        return EXIT_OK, _dump_json(doc)
    if args.format == "csv":
        rows = [(n, *(cells[c] for c in cols), "true" if agree else "false")
                for n, cells, agree in records]
        return EXIT_OK, _dump_csv(("n", *cols, "agreement"), rows)
    lines = []
    for n, cells, agree in records:
        flag = "" if agree else "   MISMATCH " + str(cells)
        lines.append(f"B_{n} = {cells['recurrence']}{flag}")
    return EXIT_OK, "\n".join(lines) + "\n"


def _bernoulli_poly(args):
    cols = ("qc", "det", "series")
    ser = cl.bern_oracle_series(args.n_max)
    records = []
    for n in range(args.n_max + 1):
        vals = {"series": ser[n]}
        if n >= 1:
            vals.update(qc=cl.bern_poly_qc(n), det=cl.bern_poly_det(n))
        agree = all(v == vals["series"] for v in vals.values())
        records.append((n, vals, agree))
    if args.format == "json":
        doc = [{"n": n, "values": {c: poly_to_json(v) for c, v in vals.items()}, "agreement": agree}
               for n, vals, agree in records]
        return EXIT_OK, _dump_json(doc)
    if args.format == "csv":
        rows = [(n, *(format_poly(vals[c]) if c in vals else "" for c in cols),
                 "true" if agree else "false") for n, vals, agree in records]
        return EXIT_OK, _dump_csv(("n", *cols, "agreement"), rows)
    lines = [f"B_{n}(u) = {format_poly(vals['series'])}" + ("" if agree else "   MISMATCH")
             for n, vals, agree in records]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_apostol(args):
    n = args.n
    formulas = ap.NUMBER_FORMULAS if args.numbers else ap.POLY_FORMULAS
    if args.formula is not None:
        if args.formula not in formulas:
            raise UsageError(f"unknown formula {args.formula!r}; choose from {', '.join(formulas)}")
        formulas = (args.formula,)
    if args.z is not None and args.z == 1:
        raise UsageError("z = 1 is outside the Apostol formulas; use the bernoulli command")
    if args.z is None and args.u is not None:
        raise UsageError("--u needs --z; symbolic output is already a polynomial in u")
    if args.z is not None:
        return _apostol_at_point(args, formulas)

    if args.numbers:
        results = [(f, ap.apostol_number(n, f).value) for f in formulas]
        agree = all(v == results[0][1] for _, v in results)
        if args.format == "json":
            doc = {"n": n, "agreement": agree,
                   "numbers": [{"formula": f, "value": poleform_to_json(v)} for f, v in results]}
            return EXIT_OK, _dump_json(doc)
        if args.format == "csv":
            rows = [(n, f, "|".join(poly_to_json(v.num)), v.pole_order, format_poleform(v))
                    for f, v in results]
            return EXIT_OK, _dump_csv(("n", "formula", "num", "pole_order", "text"), rows)
        return EXIT_OK, _plain_lines(f"B_{n}(z)", results, agree, format_poleform)

    results = [(f, ap.apostol_polynomial(n, f).value) for f in formulas]
    agree = all(v == results[0][1] for _, v in results)
    if args.format == "json":
        doc = {"n": n, "agreement": agree,
               "polynomials": [abpoly_to_json(v, n, f) for f, v in results]}
        return EXIT_OK, _dump_json(doc)
    if args.format == "csv":
        rows = []
        for f, v in results:
            for i, c in enumerate(v.coeffs):
                rows.append((n, f, i, "|".join(poly_to_json(c.num)), c.pole_order, format_poleform(c)))
        return EXIT_OK, _dump_csv(("n", "formula", "u_power", "num", "pole_order", "text"), rows)
    return EXIT_OK, _plain_lines(f"B_{n}(u,z)", results, agree, format_poly)


def _plain_lines(label, results, agree, fmt) -> str:
    if agree:
        return f"{label} = {fmt(results[0][1])}\n"
    return "".join(f"{label} [{f}] = {fmt(v)}\n" for f, v in results)


def _apostol_at_point(args, formulas):
    n, z = args.n, args.z
    u = args.u if args.u is not None else Fraction(0)
    if args.numbers and u != 0:
        raise UsageError("--numbers evaluates at u = 0; drop --u")
    results = []
    for f in formulas:
        if args.numbers:
            results.append((f, ap.apostol_number(n, f).value.evaluate(z)))
        else:
            results.append((f, ap.apostol_eval(n, z, u, f)))
    results.append(("series_at_point", ap.apostol_eval(n, z, u, "series_at_point")))
    agree = len({v for _, v in results}) == 1
    if args.format == "json":
        doc = {"n": n, "z": format_rat(z), "u": format_rat(u), "agreement": agree,
               "values": {f: format_rat(v) for f, v in results}}
        return EXIT_OK, _dump_json(doc)
    if args.format == "csv":
        return EXIT_OK, _dump_csv(("n", "z", "u", "formula", "value"),
                                  [(n, format_rat(z), format_rat(u), f, format_rat(v)) for f, v in results])
    label = f"B_{n}({format_rat(z)})" if args.numbers else f"B_{n}({format_rat(u)},{format_rat(z)})"
    return EXIT_OK, _plain_lines(label, results, agree, format_rat)


def cmd_verify(args):
    if args.n_max is not None and args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    poly_n = args.n_max if args.n_max is not None else vf.DEFAULT_POLY_N_MAX
    num_n = args.n_max if args.n_max is not None else vf.DEFAULT_NUM_N_MAX
    report = vf.run_all(poly_n, num_n, seed=args.seed)
    status = EXIT_OK if report.passed else EXIT_MISMATCH
    if args.format == "json":
        doc = {"passed": report.passed, "poly_n_max": poly_n, "num_n_max": num_n,
               "checks": [{"name": c.name, "cases": c.cases, "passed": c.passed,
                           "counterexample": c.mismatch} for c in report.checks]}
        return status, _dump_json(doc)
    if args.format == "csv":
        rows = [(c.name, c.cases, "true" if c.passed else "false", c.mismatch or "")
                for c in report.checks]
        return status, _dump_csv(("check", "cases", "passed", "counterexample"), rows)
    lines = []
    for c in report.checks:
        lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name} ({c.cases} cases)")
    failure = report.first_failure()
    if failure is not None:
        lines.append(f"first counterexample [{failure.name}]: {failure.mismatch}")
    lines.append("all checks passed" if report.passed else "verification FAILED")
    return status, "\n".join(lines) + "\n"


COMMANDS = {
    "stirling": cmd_stirling,
    "bell": cmd_bell,
    "bernoulli": cmd_bernoulli,
    "apostol": cmd_apostol,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        status, text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"apostol-bernoulli: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ap.PoleAtOneError as exc:
        print(f"apostol-bernoulli: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    uqglmn --M 2 --N 1 normalize "E[1,3]*F[1,2]"
    uqglmn --M 2 --N 1 comm "E[1,2]" "F[1,2]"
    uqglmn --M 2 --N 2 table --format json
    uqglmn --M 2 --N 3 verify --suite all --seed 7

Exit codes: 0 ok, 1 a verification failed, 2 usage or parse error,
3 internal error.  An expression argument ``-`` is read from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import product

from .expr import ExprError, ExprSyntaxError, GeneratorIndexError, parse_element
from .pbw import DimensionMismatch, NotHomogeneous, StraighteningError
from .render import element_records, render_latex, render_text
from .rootdata import IndefiniteDegreeSign, Superdim, positive_roots
from .verify import SUITES, algebra, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="uqglmn", description="PBW normal forms in U_q(gl(M|N)).")
    p.add_argument("--M", type=int, required=True, help="even part dimension")
    p.add_argument("--N", type=int, required=True, help="odd part dimension")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", help="print the PBW normal form of an expression")
    s.add_argument("expr", help="expression, or - for stdin")

    s = sub.add_parser("comm", help="q-supercommutator of two homogeneous expressions")
    s.add_argument("a")
    s.add_argument("b")

    sub.add_parser("table", help="supercommutators of all pairs of root vectors")

    s = sub.add_parser("verify", help="run the verification suites")
    s.add_argument("--suite", choices=SUITES + ("all",), default="all")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=500, help="associativity trials")
    s.add_argument("--max-len", type=int, default=4, help="max word length in the associativity fuzz")
    return p


def _read(arg: str) -> str:
    return sys.stdin.read() if arg == "-" else arg


def _emit(x, fmt, out, label=None):
    if fmt == "json":
        for rec in element_records(x):
            if label:
                rec = {**label, **rec}
            out.write(json.dumps(rec, sort_keys=True) + "\n")
        if not x and label:
            out.write(json.dumps({**label, "coeff": "0", "monomial": "0"}, sort_keys=True) + "\n")
    elif fmt == "latex":
        out.write(render_latex(x) + "\n")
    else:
        out.write(render_text(x) + "\n")


def _table(alg, fmt, out):
    roots = positive_roots(alg.dim)
    gens = {"E": alg.E, "F": alg.F}
    rows = []
    for ta, tb in (("E", "E"), ("E", "F"), ("F", "F")):
        for r, s in product(roots, roots):
            if ta == tb and r > s:
                continue
            rows.append((ta, r, tb, s))
    for ta, r, tb, s in rows:
        val = alg.supercommutator(gens[ta](*r), gens[tb](*s))
        a, b = f"{ta}[{r[0]},{r[1]}]", f"{tb}[{s[0]},{s[1]}]"
        if fmt == "json":
            rec = {"a": a, "b": b, "value": render_text(val), "terms": element_records(val)}
            out.write(json.dumps(rec, sort_keys=True) + "\n")
        elif fmt == "latex":
            la = f"{ta}_{{{r[0]}{r[1]}}}"
            lb = f"{tb}_{{{s[0]}{s[1]}}}"
            out.write(f"[\\![{la}, {lb}]\\!] = {render_latex(val)}\n")
        else:
            out.write(f"scomm({a}, {b}) = {render_text(val)}\n")


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        try:
            dim = Superdim(args.M, args.N)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        alg = algebra(dim)
        if args.command == "normalize":
            _emit(parse_element(_read(args.expr), alg), args.format, out)
        elif args.command == "comm":
            if args.a == "-" and args.b == "-":
                raise UsageError("only one argument may be read from stdin")
            a = parse_element(_read(args.a), alg)
            b = parse_element(_read(args.b), alg)
            _emit(alg.supercommutator(a, b), args.format, out)
        elif args.command == "table":
            _table(alg, args.format, out)
        else:
            if args.trials < 1 or args.max_len < 0:
                raise UsageError("--trials must be positive and --max-len nonnegative")
            suites = SUITES if args.suite == "all" else (args.suite,)
            reports = run_suites(dim, suites, seed=args.seed, trials=args.trials, max_word_len=args.max_len)
            for rep in reports:
                out.write((rep.to_jsonl() if args.format == "json" else rep.to_text()) + "\n")
            return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    except (UsageError, ExprError, ExprSyntaxError, GeneratorIndexError, NotHomogeneous, IndefiniteDegreeSign, DimensionMismatch) as exc:
        print(f"uqglmn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StraighteningError as exc:
        print(f"uqglmn: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 -- any other failure is a bug
        print(f"uqglmn: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line entry point.

Exit codes: 0 success, 1 internal inconsistency (routes disagree or an
UNEXPECTED validation entry), 2 invalid input.
"""

import argparse
import sys
from fractions import Fraction
from math import gcd

from . import closed_forms as cf
from . import dedekind as dk
from . import sigma as sg
from . import validate as val
from .exact import FormulaError, InvalidInput, parse_rational, render

EXIT_OK, EXIT_INCONSISTENT, EXIT_INVALID = 0, 1, 2


class Inconsistent(Exception):
    pass


def _rational(text):
    try:
        return parse_rational(text)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _knot(args):
    return sg.TorusKnot(args.p, args.q)


def cmd_ordinary(args, out):
    knot = _knot(args)
    value = cf.ordinary_signature_closed(knot)
    if args.check:
        brute = sg.ordinary_signature_bruteforce(knot)
        if brute != value:
            raise Inconsistent(f"closed form {value} != brute force {brute}")
    print(value, file=out)


def cmd_signature(args, out):
    knot = _knot(args)
    c = args.C
    if not 0 < c < 1:
        raise InvalidInput(f"C must lie in (0,1), got {render(c)}")
    if sg.is_jump(knot, c):
        raise sg.JumpPointError(f"C = {render(c)} is a jump point of the signature function of {knot}")
    if (c * knot.pq).denominator == 1:
        print(f"note: C*p*q is an integer, closed formula excluded; answered by counting", file=sys.stderr)
        print(sg.signature_at(knot, c), file=out)
        return
    value = cf.signature_closed(knot, c)
    if args.check:
        brute = sg.signature_at(knot, c)
        if brute != value:
            raise Inconsistent(f"closed form {value} != brute force {brute}")
    print(value, file=out)


def cmd_profile(args, out):
    profile = sg.signature_profile(_knot(args))
    if args.format == "json":
        print(profile.to_json(), file=out)
    else:
        out.write(profile.to_tsv())


def cmd_integral(args, out):
    knot = _knot(args)
    routes = {
        "closed": cf.integral_closed,
        "bruteforce": sg.integral_bruteforce,
        "dedekind": cf.integral_via_dedekind,
    }
    names = list(routes) if args.route == "all" else [args.route]
    values = [routes[name](knot) for name in names]
    for v in values:
        print(render(v), file=out)
    if len(set(values)) > 1:
        raise Inconsistent("integral routes disagree: " + ", ".join(f"{n}={render(v)}" for n, v in zip(names, values)))


def cmd_tau(args, out):
    print(sg.tau(_knot(args), args.m), file=out)


def cmd_dedekind(args, out):
    if args.q < 1:
        raise InvalidInput(f"q must be >= 1, got {args.q}")
    if args.x is not None or args.y is not None:
        x = args.x if args.x is not None else Fraction(0)
        y = args.y if args.y is not None else Fraction(0)
        value = dk.rademacher_sum(args.p, args.q, x, y)
    elif gcd(args.p, args.q) == 1:
        value = dk.dedekind_sum_fast(args.p, args.q)
    else:
        value = dk.dedekind_sum(args.p, args.q)
    print(render(value), file=out)


def cmd_validate(args, out):
    report = val.run_validation(args.max, args.grid_density, args.jobs)
    text = val.dumps(report)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    summary = report["summary"]
    print(
        f"entries={summary['entries']} match={summary[val.MATCH]} "
        f"known-erratum={summary[val.KNOWN]} UNEXPECTED={summary[val.UNEXPECTED]}",
        file=out,
    )
    for cls in summary["known_erratum_classes"]:
        print(f"known erratum: {cls}", file=out)
    if summary[val.UNEXPECTED]:
        raise Inconsistent(f"{summary[val.UNEXPECTED]} UNEXPECTED entries")


def build_parser():
    parser = argparse.ArgumentParser(prog="torsig", description="Exact signature invariants of torus knots T(p,q).")
    sub = parser.add_subparsers(dest="command", required=True)

    def knot_args(p):
        p.add_argument("p", type=int)
        p.add_argument("q", type=int)

    p = sub.add_parser("ordinary", help="ordinary signature")
    knot_args(p)
    p.add_argument("--check", action="store_true", help="cross-check against brute-force counting")
    p.set_defaults(func=cmd_ordinary)

    p = sub.add_parser("signature", help="Tristram-Levine signature at exp(2 pi i C)")
    knot_args(p)
    p.add_argument("C", type=_rational, help="rational a/b in (0,1)")
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("profile", help="the full signature step function")
    knot_args(p)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("integral", help="integral of the signature function")
    knot_args(p)
    p.add_argument("--route", choices=("closed", "bruteforce", "dedekind", "all"), default="closed")
    p.set_defaults(func=cmd_integral)

    p = sub.add_parser("tau", help="sum of signatures at nontrivial m-th roots of unity")
    knot_args(p)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("dedekind", help="Dedekind sum s(p,q) or s(p,q;x,y)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--x", type=_rational)
    p.add_argument("--y", type=_rational)
    p.set_defaults(func=cmd_dedekind)

    p = sub.add_parser("validate", help="cross-check all closed formulas against brute force")
    p.add_argument("--max", type=int, default=20)
    p.add_argument("--grid-density", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="write the JSON report here")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        args.func(args, out)
    except sg.JumpPointError as exc:
        print(f"error: jump point of the signature function: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (Inconsistent, FormulaError) as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

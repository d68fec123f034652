"""Command-line front end.

Subcommands::

    sturmcert count   EXPR --lo A --hi B [--var x] [--endpoint-policy strict|shrink] [--json PATH]
    sturmcert isolate EXPR --lo A --hi B --width W [--var x] [--json PATH]
    sturmcert convert TRIG_EXPR [--scale M] [--var x] [--json PATH]
    sturmcert paper   {lemma1,lemma7,lemma8,lemma11,all} [--json PATH] [--jobs N]

Endpoints and widths accept decimals (``0.65``) or fractions (``13/20``); both
are converted exactly.  Exit codes: 0 success, 1 usage or parse error,
2 endpoint is a root under the strict policy, 3 unexpected certification
failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import cert
from .exact import ParseError, to_rational
from .expr import ALGEBRAIC, TRIG, parse_expr, to_poly, to_trig
from .poly import render
from .sturm import EndpointRootError, Interval, count_roots, isolate_roots
from .trig import TrigPoly, cos_to_alg, scale_argument, sin_to_alg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ENDPOINT_ROOT = 2
EXIT_NOT_CERTIFIED = 3


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str):
    try:
        return to_rational(text)
    except (ParseError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _write_json(obj, path: str) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _interval(args) -> Interval:
    try:
        return Interval(args.lo, args.hi)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_count(args) -> int:
    p = to_poly(parse_expr(args.expr, ALGEBRAIC), args.var)
    if p.is_zero():
        raise UsageError("the zero polynomial has infinitely many roots")
    iv = _interval(args)
    if p.is_constant():
        print(0)
        return EXIT_OK
    rc = count_roots(p, iv, args.endpoint_policy, margin=args.margin)
    print(rc.count)
    for a in rc.adjustments:
        print(f"note: {a.endpoint} endpoint {a.original} is a root; moved to {a.adjusted}", file=sys.stderr)
    if args.json:
        _write_json(
            {
                "poly": {"var": p.var, "coeffs": [cert.fmt(c) for c in p.coeffs]},
                "interval": {"lo": cert.fmt(rc.interval.lo), "hi": cert.fmt(rc.interval.hi)},
                "variations": [rc.variations_at_lo, rc.variations_at_hi],
                "root_count": rc.count,
                "endpoint_adjustments": [
                    {"endpoint": a.endpoint, "original": cert.fmt(a.original), "adjusted": cert.fmt(a.adjusted)}
                    for a in rc.adjustments
                ],
            },
            args.json,
        )
    return EXIT_OK


def cmd_isolate(args) -> int:
    p = to_poly(parse_expr(args.expr, ALGEBRAIC), args.var)
    if p.is_constant():
        raise UsageError("need a polynomial of degree >= 1")
    iv = _interval(args)
    offsets: list = []
    found = isolate_roots(p, iv, args.width, offsets=offsets)
    for r in found:
        print(f"({r.lo}, {r.hi}]")
    if args.json:
        _write_json(
            {
                "intervals": [{"lo": cert.fmt(r.lo), "hi": cert.fmt(r.hi)} for r in found],
                "midpoint_offsets": [cert.fmt(o) for o in offsets],
            },
            args.json,
        )
    return EXIT_OK


def convert_text(t: TrigPoly, out_var: str = "Y") -> str:
    """Render a pure cosine or pure sine polynomial as an algebraic one in ``out_var``."""
    if t.is_cosine:
        return render(cos_to_alg(t, out_var))
    if t.is_sine:
        q = sin_to_alg(t, out_var)
        if q == 1:
            return f"sin({t.var})"
        return f"sin({t.var})*({render(q)})"
    raise UsageError("mixed sine and cosine terms; convert each part separately")


def cmd_convert(args) -> int:
    t = to_trig(parse_expr(args.expr, TRIG), args.var)
    if args.scale != 1:
        t = scale_argument(t, args.scale)
    text = convert_text(t, args.out_var)
    print(text)
    if args.json:
        _write_json({"input": args.expr, "scale": args.scale, "result": text}, args.json)
    return EXIT_OK


def cmd_paper(args) -> int:
    config = cert.SuiteConfig(jobs=args.jobs)
    records = cert.run_suite(args.selector, config)
    for r in records:
        print(r.summary())
    if args.json:
        if args.json == "-":
            sys.stdout.write(cert.dumps(records) + "\n")
        else:
            cert.emit_certificates(records, args.json)
    bad = cert.unexpected_failures(records)
    if bad:
        print(f"unexpected certification failures: {', '.join(bad)}", file=sys.stderr)
        return EXIT_NOT_CERTIFIED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="sturmcert", description="Exact Sturm root counting and positivity certificates.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("count", help="count distinct real roots in (lo, hi]")
    p.add_argument("expr")
    p.add_argument("--var")
    p.add_argument("--lo", type=_rational, required=True)
    p.add_argument("--hi", type=_rational, required=True)
    p.add_argument("--endpoint-policy", choices=("strict", "shrink"), default="strict")
    p.add_argument("--margin", type=_rational, help="initial inward move for --endpoint-policy shrink")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("isolate", help="isolate each distinct real root in (lo, hi]")
    p.add_argument("expr")
    p.add_argument("--var")
    p.add_argument("--lo", type=_rational, required=True)
    p.add_argument("--hi", type=_rational, required=True)
    p.add_argument("--width", type=_rational, default=to_rational("1/1000"))
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_isolate)

    p = sub.add_parser("convert", help="rewrite a cosine/sine polynomial in Y = cos")
    p.add_argument("expr")
    p.add_argument("--var")
    p.add_argument("--scale", type=int, default=1, help="substitute x = SCALE*y first")
    p.add_argument("--out-var", default="Y")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("paper", help="run the replication suite and write certificates")
    p.add_argument("selector", choices=cert.SELECTORS)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except EndpointRootError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENDPOINT_ROOT
    except (UsageError, ParseError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

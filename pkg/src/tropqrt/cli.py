"""Command-line front end: ``tropqrt {validate,cycle,orbit,plot,add,neg} FILE``.

``FILE`` is a scenario JSON path, or ``@paper`` for the bundled scenario.
Exit status: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .core import Point, as_fraction
from .curve import cycle_chart, validate_strict
from .errors import DegenerateCycle, ParseError, TropicalError
from .group_law import add, negate, require_on_cycle
from .io import bundled_path, default_bbox, emit_orbit_csv, emit_svg, load_scenario, parse_curve
from .jacobian import calibrate_constant
from .qrt import orbit, period_of, translation_length


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _resolve(name: str) -> Path:
    if name.startswith("@"):
        try:
            return bundled_path(name[1:])
        except KeyError:
            raise UsageError(f"no bundled scenario named {name[1:]!r}") from None
    return Path(name)


def _point_arg(text: str) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected X,Y, got {text!r}")
    try:
        return Point(as_fraction(parts[0].strip()), as_fraction(parts[1].strip()))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad point {text!r}") from None


def _write(path: str | None, render) -> None:
    if path is None or path == "-":
        render(sys.stdout)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            render(fh)


def _cmd_validate(args) -> int:
    # Only the curve is read, so a scenario whose points are off the cycle
    # (or whose cycle is degenerate) can still be diagnosed.
    try:
        doc = json.loads(_resolve(args.file).read_text(encoding="utf-8"), parse_float=Fraction)
    except ValueError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    curve = parse_curve(doc.get("curve") if isinstance(doc, dict) else None)
    report = validate_strict(curve)
    print(f"strict chains: {'PASS' if report.passed else 'FAIL'}")
    for line in report.lines():
        print(f"  {line}")
    for left, right in report.violations():
        print(f"  violated: a{left} > a{right} ({curve.coeffs[left]} vs {curve.coeffs[right]})")
    try:
        chart = cycle_chart(curve)
    except DegenerateCycle as exc:
        print(f"cycle: DEGENERATE ({exc})")
        return 1
    print(f"cycle: OK (L = {chart.total})")
    return 0


def _cmd_cycle(args) -> int:
    s = load_scenario(_resolve(args.file))
    chart = s.chart
    print("vertices: " + " ".join(str(v) for v in chart.vertices))
    print("edge_lengths: " + " ".join(str(x) for x in chart.edge_lengths))
    print(f"L = {chart.total}")
    print(f"ccal = {calibrate_constant(s.curve, chart)}")
    delta = translation_length(chart, s.theta, s.t)
    print(f"delta = {delta}")
    print(f"period = {period_of(chart, delta)}")
    return 0


def _cmd_orbit(args) -> int:
    s = load_scenario(_resolve(args.file))
    o = orbit(s, args.steps)
    _write(args.csv, lambda fh: emit_orbit_csv(o, fh))
    if args.csv not in (None, "-"):
        period = o.period if o.period is not None else "not reached"
        print(f"rows = {len(o)}  delta = {o.delta}  period = {period}")
    return 0


def _cmd_plot(args) -> int:
    s = load_scenario(_resolve(args.file))
    bbox = s.bbox or default_bbox(s.chart)
    o = orbit(s) if args.orbit else None
    _write(args.svg, lambda fh: emit_svg(s.curve, s.chart, o, bbox, fh))
    return 0


def _cmd_add(args) -> int:
    s = load_scenario(_resolve(args.file))
    print(add(s.curve, s.chart, s.theta, _point_arg(args.p), _point_arg(args.q)))
    return 0


def _cmd_neg(args) -> int:
    s = load_scenario(_resolve(args.file))
    p = _point_arg(args.p)
    require_on_cycle(s.curve, p)
    print(negate(s.chart, s.theta, p))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tropqrt", description="Tropical elliptic curves and the tropical QRT map.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="smoothness chains and cycle non-degeneracy")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("cycle", help="vertices, edge lengths, L, ccal, delta, period")
    p.add_argument("file")
    p.set_defaults(func=_cmd_cycle)

    p = sub.add_parser("orbit", help="iterate the map and emit CSV")
    p.add_argument("file")
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--csv", nargs="?", const="-", default=None, metavar="PATH")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("plot", help="SVG of the curve, optionally with the orbit")
    p.add_argument("file")
    p.add_argument("--svg", default=None, metavar="PATH")
    p.add_argument("--orbit", action="store_true")
    p.set_defaults(func=_cmd_plot)

    p = sub.add_parser("add", help="P + Q with the scenario's theta as zero")
    p.add_argument("file")
    p.add_argument("--p", required=True, metavar="X,Y")
    p.add_argument("--q", required=True, metavar="X,Y")
    p.set_defaults(func=_cmd_add)

    p = sub.add_parser("neg", help="-P with the scenario's theta as zero")
    p.add_argument("file")
    p.add_argument("--p", required=True, metavar="X,Y")
    p.set_defaults(func=_cmd_neg)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "orbit" and args.steps is not None and args.steps < 0:
            raise UsageError("--steps must be nonnegative")
        return args.func(args)
    except UsageError as exc:
        print(f"tropqrt: usage error: {exc}", file=sys.stderr)
        return 2
    except TropicalError as exc:
        print(f"tropqrt: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"tropqrt: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

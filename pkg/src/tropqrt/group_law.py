"""Chord construction and the group law on the cycle with an arbitrary zero.

The coordinate-sum rule draws the line through ``p`` and ``q``, reads off the
three points where its rays leave the ``x+y+a4`` region and subtracts ``p``
and ``q`` from their sum. It is only meaningful when both inputs are among
those exit points; otherwise (overlapping line, doubling) the answer comes
from arc coordinates.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Point
from .curve import CurveParams, CycleChart, ExitTriple, on_cycle, ray_exits
from .errors import NotOnCycle, VertexOutsideRegion
from .jacobian import arc_param, arc_point, calibrate_constant, third_point_oracle
from .line import line_through, vertex_of

__all__ = [
    "ExitTriple",
    "add",
    "arc_sum",
    "formula_third_point",
    "negate",
    "ray_exits",
    "require_on_cycle",
    "third_point",
]


def require_on_cycle(c: CurveParams, *points: Point) -> None:
    for p in points:
        if not on_cycle(c, p):
            raise NotOnCycle(p, c.argmax(p))


def exits_contain(exits: ExitTriple, p: Point, q: Point) -> bool:
    """Multiset containment of ``{p, q}`` in the exit triple."""
    rest = list(exits)
    for pt in (p, q):
        if pt not in rest:
            return False
        rest.remove(pt)
    return True


def formula_third_point(c: CurveParams, p: Point, q: Point) -> Point | None:
    """Coordinate-sum third point, or ``None`` when the rule does not apply."""
    if p == q:
        return None
    try:
        exits = ray_exits(c, vertex_of(line_through(p, q)))
    except VertexOutsideRegion:
        return None
    if not exits_contain(exits, p, q):
        return None
    return Point(
        sum(r.x for r in exits) - p.x - q.x,
        sum(r.y for r in exits) - p.y - q.y,
    )


def third_point(c: CurveParams, chart: CycleChart, p: Point, q: Point) -> Point:
    require_on_cycle(c, p, q)
    r = formula_third_point(c, p, q)
    if r is None:
        r = third_point_oracle(chart, calibrate_constant(c, chart), p, q)
    return r


def negate(chart: CycleChart, theta: Point, p: Point) -> Point:
    """Inverse of ``p`` for the group with zero ``theta``."""
    return arc_point(chart, 2 * arc_param(chart, theta) - arc_param(chart, p))


def add(c: CurveParams, chart: CycleChart, theta: Point, p: Point, q: Point) -> Point:
    """``p + q`` with zero ``theta``: the third point of the line through ``theta`` and ``-(p + q)``."""
    require_on_cycle(c, theta)
    return third_point(c, chart, third_point(c, chart, p, q), theta)


def arc_sum(chart: CycleChart, theta: Point, p: Point, q: Point) -> Fraction:
    """Arc coordinate of ``p + q``; the chord construction reduces to ``s(p) + s(q) - s(theta)``."""
    return (arc_param(chart, p) + arc_param(chart, q) - arc_param(chart, theta)) % chart.total

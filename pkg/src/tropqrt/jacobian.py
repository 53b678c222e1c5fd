"""Lattice-length coordinates on the cycle.

The cycle with its lattice metric is a circle of circumference ``L``; the arc
coordinate ``s`` turns the chord construction into arithmetic mod ``L``. This
is the oracle the coordinate formulas in :mod:`tropqrt.group_law` are checked
against, and the fallback when those formulas do not apply.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .core import Point
from .curve import CurveParams, CycleChart, ray_exits
from .errors import NotOnCycle


def arc_param(chart: CycleChart, p: Point) -> Fraction:
    """Arc coordinate of ``p`` in ``[0, L)``, measured counterclockwise from the basepoint."""
    # Edge directions are unit lattice steps, so the lattice parameter along
    # an edge is the change in whichever coordinate moves.
    for start, (dx, dy), length, offset in chart.edges():
        if dx == 0:
            if p.x != start.x:
                continue
            t = (p.y - start.y) * dy
        else:
            t = (p.x - start.x) * dx
            if p.y - start.y != t * dy:
                continue
        if 0 <= t < length:
            return offset + t
    raise NotOnCycle(p)


def arc_point(chart: CycleChart, s: Fraction | int) -> Point:
    """Point at arc coordinate ``s`` (taken mod ``L``)."""
    s = Fraction(s) % chart.total
    for start, (dx, dy), length, offset in chart.edges():
        if s < offset + length:
            t = s - offset
            return Point(start.x + t * dx, start.y + t * dy)
    raise AssertionError("arc coordinate past the end of the chart")  # unreachable


def _is_chart_vertex(chart: CycleChart, p: Point) -> bool:
    return p in chart.vertices


@lru_cache(maxsize=256)
def calibrate_constant(c: CurveParams, chart: CycleChart) -> Fraction:
    """Residue mod ``L`` of ``s(r1) + s(r2) + s(r3)`` for any line vertex inside the cycle."""
    n = len(chart.vertices)
    v = Point(sum(p.x for p in chart.vertices) / n, sum(p.y for p in chart.vertices) / n)
    exits = ray_exits(c, v)
    if any(_is_chart_vertex(chart, r) for r in exits):
        eps = min(chart.edge_lengths) / 16
        v = Point(v.x + eps, v.y + 2 * eps)
        exits = ray_exits(c, v)
    return sum((arc_param(chart, r) for r in exits), Fraction(0)) % chart.total


def third_point_oracle(chart: CycleChart, ccal: Fraction, p: Point, q: Point) -> Point:
    """Third intersection of the line through ``p`` and ``q``, computed in arc coordinates."""
    return arc_point(chart, ccal - arc_param(chart, p) - arc_param(chart, q))

"""The tropical QRT map ``P -> P + T`` and its closed-form orbits."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import NamedTuple

from .core import Point
from .curve import (
    EDGE_DIRECTIONS,
    CurveParams,
    CycleChart,
    ExitTriple,
    cycle_chart,
    in_center_region,
    on_cycle,
)
from .errors import NotOnCycle
from .group_law import exits_contain
from .jacobian import arc_param, arc_point, calibrate_constant, third_point_oracle


@dataclass(frozen=True)
class Scenario:
    curve: CurveParams
    theta: Point
    t: Point
    p0: Point
    steps: int = 0
    bbox: tuple[Fraction, Fraction, Fraction, Fraction] | None = None

    def __post_init__(self) -> None:
        if self.steps < 0:
            raise ValueError("steps must be nonnegative")
        for p in (self.theta, self.t, self.p0):
            if not on_cycle(self.curve, p):
                raise NotOnCycle(p, self.curve.argmax(p))

    @cached_property
    def chart(self) -> CycleChart:
        return cycle_chart(self.curve)


class HalfStep(NamedTuple):
    vertex: Point
    exits: ExitTriple | None  # None when the vertex fell outside the a4 region
    formula: Point | None  # coordinate-sum result, None if the rule does not apply
    result: Point


class StepTrace(NamedTuple):
    forward: HalfStep  # line through P and T; result is -P̄
    back: HalfStep  # line through -P̄ and theta; result is P̄

    @property
    def pbar(self) -> Point:
        return self.back.result


def _half_step(c: CurveParams, chart: CycleChart, p: Point, q: Point) -> HalfStep:
    a1, a2, a3, a4, a5, a7, a8 = (c[i] for i in (1, 2, 3, 4, 5, 7, 8))
    m = max(p.x + q.y, p.y + q.x)
    vx = m - max(q.y, p.y)
    vy = m - max(q.x, p.x)
    vertex = Point(vx, vy)
    exits = formula = None
    if in_center_region(c, vertex):
        below = max(a1 - a4, vx + a3 - a4)
        left = max(a2 - a4, vy + a5 - a4)
        diag_x = max(a7 - a4, vy - vx + a8 - a4)
        diag_y = max(a8 - a4, vx - vy + a7 - a4)
        exits = ExitTriple(Point(vx, below), Point(left, vy), Point(-diag_x, -diag_y))
        if p != q and exits_contain(exits, p, q):
            formula = Point(vx + left - diag_x - q.x - p.x, vy + below - diag_y - q.y - p.y)
    if formula is not None:
        result = formula
    else:
        result = third_point_oracle(chart, calibrate_constant(c, chart), p, q)
    return HalfStep(vertex, exits, formula, result)


def qrt_trace(c: CurveParams, chart: CycleChart, theta: Point, t: Point, p: Point) -> StepTrace:
    """One step of the map with every intermediate quantity exposed."""
    for pt in (theta, t, p):
        if not on_cycle(c, pt):
            raise NotOnCycle(pt, c.argmax(pt))
    forward = _half_step(c, chart, p, t)
    back = _half_step(c, chart, forward.result, theta)
    return StepTrace(forward, back)


def qrt_step(c: CurveParams, chart: CycleChart, theta: Point, t: Point, p: Point) -> Point:
    return qrt_trace(c, chart, theta, t, p).pbar


def translation_length(chart: CycleChart, theta: Point, t: Point) -> Fraction:
    """Arc shift per step, in ``[0, L)``."""
    return (arc_param(chart, t) - arc_param(chart, theta)) % chart.total


def period_of(chart: CycleChart, delta: Fraction) -> int:
    """Least ``n >= 1`` with ``n * delta`` a multiple of ``L``."""
    return (Fraction(delta) / chart.total % 1).denominator


def elliptic_value(chart: CycleChart, p0: Point, delta: Fraction, n: int) -> Point:
    """``P(n)`` in closed form; negative ``n`` runs the map backwards."""
    return arc_point(chart, arc_param(chart, p0) + n * delta)


class _Lattice:
    """Integer copy of a scenario, scaled by the lcm of its denominators.

    Every quantity the map touches (vertices, exits, arc coordinates, the
    collinearity constant) stays on the lattice ``Z^2 / scale``, so orbits can
    be iterated with machine-sized ints and converted back once. Agreement
    with :func:`qrt_step` is checked in the test suite.
    """

    def __init__(self, s: Scenario):
        c, chart = s.curve, s.chart
        values = [v for v in (c[k] for k in range(10)) if v is not None]
        values += [*s.theta, *s.t, *s.p0]
        d = lcm(*(v.denominator for v in values))
        self.scale = d
        a = [None if c[k] is None else int(c[k] * d) for k in range(10)]
        a1, a2, a3, a4, a5, a7, a8 = (a[k] for k in (1, 2, 3, 4, 5, 7, 8))
        self.consts = (a1 - a4, a3 - a4, a2 - a4, a5 - a4, a7 - a4, a8 - a4)
        self.edges = tuple(
            (int(v.x * d), int(v.y * d), dx, dy, int(length * d), int(off * d))
            for v, (dx, dy), length, off in chart.edges()
        )
        self.length = int(chart.total * d)
        ccal = calibrate_constant(c, chart) * d
        if ccal.denominator != 1:
            raise AssertionError("collinearity constant is off the lattice")  # pragma: no cover
        self.ccal = int(ccal)

    def lift(self, p: Point) -> tuple[int, int]:
        return int(p.x * self.scale), int(p.y * self.scale)

    def arc(self, x: int, y: int) -> int:
        for sx, sy, dx, dy, length, off in self.edges:
            ex, ey = x - sx, y - sy
            if ex * dy != ey * dx:
                continue
            t = ex * dx if dx else ey * dy
            if 0 <= t < length:
                return off + t
        raise NotOnCycle((x, y))  # pragma: no cover

    def point(self, s: int) -> tuple[int, int]:
        s %= self.length
        for sx, sy, dx, dy, length, off in self.edges:
            if s < off + length:
                t = s - off
                return sx + t * dx, sy + t * dy
        raise AssertionError("unreachable")  # pragma: no cover

    def on_cycle(self, x: int, y: int) -> bool:
        # cycle_chart has already ruled out a0/a6/a9 cutting into the hexagon,
        # so the region is cut out by the six neighbouring terms alone.
        b1, b3, b2, b5, b7, b8 = self.consts
        inside = b1 <= y and b2 <= x and x + b3 <= y and y + b5 <= x and x <= -b7 and y <= -b8
        return inside and (y == b1 or x == b2 or y == x + b3 or x == y + b5 or x == -b7 or y == -b8)

    def stepper(self, theta: tuple[int, int], t: tuple[int, int]):
        """Return ``step(x, y) -> (x', y')`` for the map with everything bound locally."""
        b1, b3, b2, b5, b7, b8 = self.consts
        arc, point, ccal = self.arc, self.point, self.ccal

        def half(px, py, qx, qy):
            m = px + qy if px + qy > py + qx else py + qx
            vx = m - (qy if qy > py else py)
            vy = m - (qx if qx > px else px)
            if (
                (px != qx or py != qy)
                and b1 <= vy and b2 <= vx and vx + b3 <= vy
                and vy + b5 <= vx and vx <= -b7 and vy <= -b8
            ):
                below = vx + b3 if vx + b3 > b1 else b1
                left = vy + b5 if vy + b5 > b2 else b2
                dx = -(vy - vx + b8 if vy - vx + b8 > b7 else b7)
                dy = -(vx - vy + b7 if vx - vy + b7 > b8 else b8)
                exits = ((vx, below), (left, vy), (dx, dy))
                # p != q, so membership of both is multiset containment.
                if (px, py) in exits and (qx, qy) in exits:
                    return vx + left + dx - px - qx, vy + below + dy - py - qy
            return point(ccal - arc(px, py) - arc(qx, qy))

        zx, zy = theta
        tx, ty = t

        def step(px, py):
            mx, my = half(px, py, tx, ty)
            return half(mx, my, zx, zy)

        return step

@dataclass(frozen=True)
class OrbitRecord:
    points: tuple[Point, ...]
    arcs: tuple[Fraction, ...]
    delta: Fraction
    period: int | None
    on_cycle_flags: tuple[bool, ...]
    length: Fraction

    def __len__(self) -> int:
        return len(self.points)


def orbit(s: Scenario, steps: int | None = None) -> OrbitRecord:
    """Iterate the map from ``s.p0``; ``steps`` overrides ``s.steps``."""
    n = s.steps if steps is None else steps
    lat = _Lattice(s)
    step = lat.stepper(lat.lift(s.theta), lat.lift(s.t))
    p = lat.lift(s.p0)
    raw = [p]
    for _ in range(n):
        p = step(*p)
        raw.append(p)
    # Conversion back to fractions is per distinct point; the iteration above is not memoised.
    seen: dict[tuple[int, int], tuple[Point, Fraction, bool]] = {}
    for q in raw:
        if q not in seen:
            seen[q] = (
                Point(Fraction(q[0], lat.scale), Fraction(q[1], lat.scale)),
                Fraction(lat.arc(*q), lat.scale),
                lat.on_cycle(*q),
            )
    rows = [seen[q] for q in raw]
    period = next((k for k in range(1, len(raw)) if raw[k] == raw[0]), None)
    return OrbitRecord(
        points=tuple(r[0] for r in rows),
        arcs=tuple(r[1] for r in rows),
        delta=translation_length(s.chart, s.theta, s.t),
        period=period,
        on_cycle_flags=tuple(r[2] for r in rows),
        length=s.chart.total,
    )

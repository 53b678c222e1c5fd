"""
Chords and the group law
========================

A tropical line meets the cycle in three points.  Fixing a zero point
theta turns the cycle into a group: P + Q is the third point on the line
through theta and the third point of the line through P and Q.
"""

from fractions import Fraction

from tropqrt import (
    CurveParams,
    Point,
    add,
    arc_param,
    calibrate_constant,
    cycle_chart,
    formula_third_point,
    line_through,
    negate,
    ray_exits,
    third_point,
    vertex_of,
)

c = CurveParams.from_values([None, 0, 0, -1, 0, -1, None, -2, -2, None])
chart = cycle_chart(c)

p, q = Point.of(2, "13/10"), Point.of(0, "1/2")
v = vertex_of(line_through(p, q))
print("line vertex:", v)
print("ray exits:  ", *ray_exits(c, v))

# generic case: the coordinate-sum rule gives the third point directly
print("third point:", formula_third_point(c, p, q))

# if the line runs along an edge the rule does not apply and the
# arc-length chart takes over
p, q = Point.of("1/5", 0), Point.of("1/2", 0)
print("formula:", formula_third_point(c, p, q), " chart:", third_point(c, chart, p, q))

# in arc coordinates the three points of any line sum to a constant
ccal = calibrate_constant(c, chart)
print("arc sum of a line's three points:", ccal, "(mod", chart.total, ")")

theta = Point.of(0, "1/2")
a, b = Point.of("6/5", "1/5"), Point.of(2, "6/5")
print("a + b =", add(c, chart, theta, a, b))
print("-a    =", negate(chart, theta, a))
print("s(a) + s(b) - s(theta) =", (arc_param(chart, a) + arc_param(chart, b) - arc_param(chart, theta)) % chart.total)
print("s(a + b)               =", arc_param(chart, add(c, chart, theta, a, b)))

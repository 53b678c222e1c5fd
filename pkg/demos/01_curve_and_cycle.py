"""
A tropical cubic and its cycle
==============================

A max-plus cubic is a maximum of ten affine terms.  The region where the
x+y term wins is a hexagon, and the hexagon's boundary is the cycle that
carries all the interesting structure.
"""

from tropqrt import CurveParams, Point, cycle_chart, on_curve, on_cycle, validate_strict

# None stands for -inf; only a0, a6, a9 may be missing
c = CurveParams.from_values([None, 0, 0, -1, 0, -1, None, -2, -2, None])
print("curve:", c)

chart = cycle_chart(c)
for v, length in zip(chart.vertices, chart.edge_lengths):
    print("vertex", v, " edge length", length)
print("cycle length L =", chart.total)

# a point on a tentacle is on the curve but not on the cycle
for p in [Point.of(0.5, 0), Point.of(2, 2), Point.of(-1, -1), Point.of(1, 1)]:
    print(p, "curve:", on_curve(c, p), " cycle:", on_cycle(c, p))

# the textbook smoothness chains are sufficient, not necessary
report = validate_strict(c)
print("strict chains pass:", report.passed)
print("violated:", ["a%d > a%d" % v for v in report.violations()])

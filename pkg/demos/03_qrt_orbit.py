"""
The tropical QRT map
====================

One step of the map is addition of a fixed point T, so on the cycle it is a
rotation by the arc length between theta and T.  With rational data every
orbit closes up.
"""

import sys
from pathlib import Path

from tropqrt import elliptic_value, orbit, period_of, qrt_trace
from tropqrt.io import emit_orbit_csv, emit_svg, load_scenario

s = load_scenario(Path(__file__).with_name("paper.json"))
o = orbit(s)
print("delta =", o.delta, " period =", o.period, " predicted:", period_of(s.chart, o.delta))

# each step, with both half-steps shown
p = s.p0
for n in range(o.period):
    tr = qrt_trace(s.curve, s.chart, s.theta, s.t, p)
    how = "formula" if tr.forward.formula is not None else "chart"
    print(f"P({n}) = {p}  ->  -Pbar = {tr.forward.result} ({how})  ->  Pbar = {tr.pbar}")
    p = tr.pbar

# closed form, no iteration; negative n runs backwards
print("P(-1) =", elliptic_value(s.chart, s.p0, o.delta, -1))

emit_orbit_csv(o, sys.stdout)

out = Path("orbit.svg")
with out.open("w") as fh:
    emit_svg(s.curve, s.chart, o, s.bbox, fh)
print("wrote", out)

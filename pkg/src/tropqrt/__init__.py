"""Exact tropical elliptic curves, the tropical group law and the tropical QRT map."""

from .core import NEG_INF, Point, TropMonomial, TropPolynomial, TropScalar, eval_poly, trop_add, trop_mul
from .curve import (
    CurveParams,
    CycleChart,
    ExitTriple,
    LocusPiece,
    corner_locus,
    cycle_chart,
    on_curve,
    on_cycle,
    ray_exits,
    validate_strict,
)
from .errors import DegenerateCycle, NotOnCycle, ParseError, TropicalError, VertexOutsideRegion
from .group_law import add, formula_third_point, negate, third_point
from .jacobian import arc_param, arc_point, calibrate_constant, third_point_oracle
from .line import TropLine, line_through, point_on_line, vertex_of
from .qrt import (
    OrbitRecord,
    Scenario,
    elliptic_value,
    orbit,
    period_of,
    qrt_step,
    qrt_trace,
    translation_length,
)

__version__ = "0.1.0"

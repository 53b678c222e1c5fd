import random
from fractions import Fraction

import pytest
from conftest import CURVES, STRICT, P, random_arc
from oracles import lattice_walk, terms_of

from tropqrt import (
    CurveParams,
    NotOnCycle,
    arc_param,
    arc_point,
    calibrate_constant,
    cycle_chart,
    on_cycle,
    ray_exits,
    third_point_oracle,
)

F = Fraction


@pytest.mark.parametrize("pt, s", [(P(0, 0), 0), (P(0.5, 0), F(1, 2)), (P(0, 0.5), F(11, 2)), (P(2, 2), 3)])
def test_arc_param_examples(example_chart, pt, s):
    assert arc_param(example_chart, pt) == s


@pytest.mark.parametrize("s, pt", [(F(23, 10), P(2, 1.3)), (0, P(0, 0)), (F(21, 5), P(0.8, 1.8)), (6, P(0, 0)), (-1, P(0, 1))])
def test_arc_point_examples(example_chart, s, pt):
    assert arc_point(example_chart, s) == pt


def test_arc_param_rejects_off_cycle(example_chart):
    with pytest.raises(NotOnCycle):
        arc_param(example_chart, P(1, 1))


def test_round_trip(any_curve):
    c, chart = any_curve
    rng = random.Random(1)
    for _ in range(1000):
        s = random_arc(rng, chart.total, den=84)
        p = arc_point(chart, s)
        assert on_cycle(c, p)
        assert arc_param(chart, p) == s
        assert arc_point(chart, arc_param(chart, p)) == p


def test_arc_point_agrees_with_independent_walk(any_curve):
    _, chart = any_curve
    vs = [(v.x, v.y) for v in chart.vertices]
    rng = random.Random(2)
    for _ in range(200):
        s = random_arc(rng, chart.total)
        assert tuple(arc_point(chart, s)) == lattice_walk(vs, s)


def test_calibration_examples(example, example_chart):
    assert calibrate_constant(example, example_chart) == 3
    # direct sums from two vertices
    for v in (P(1, 1), P(1.2, 0.5)):
        total = sum(arc_param(example_chart, r) for r in ray_exits(example, v))
        assert total % 6 == 3


def test_strict_curve_calibration():
    c = CurveParams.from_values(STRICT)
    assert calibrate_constant(c, cycle_chart(c)) == 3


def _random_region_point(rng, c, chart, den=48):
    xmin, ymin, xmax, ymax = chart.bounds()
    while True:
        x = xmin + F(rng.randrange(int((xmax - xmin) * den) + 1), den)
        y = ymin + F(rng.randrange(int((ymax - ymin) * den) + 1), den)
        if (1, 1) in c.argmax(P(x, y)):
            return P(x, y)


def test_calibration_independent_of_vertex(any_curve):
    c, chart = any_curve
    ccal = calibrate_constant(c, chart)
    rng = random.Random(3)
    for _ in range(100):
        v = _random_region_point(rng, c, chart)
        assert sum(arc_param(chart, r) for r in ray_exits(c, v)) % chart.total == ccal


@pytest.mark.parametrize(
    "p, q, r", [(P(0.2, 0), P(0.5, 0), P(2, 1.3)), (P(1, 0), P(0, 1), P(2, 2))]
)
def test_third_point_oracle_examples(example_chart, p, q, r):
    assert third_point_oracle(example_chart, 3, p, q) == r
    assert third_point_oracle(example_chart, 3, q, p) == r


def test_third_point_oracle_rejects_off_cycle(example, example_chart):
    # (3/2, 1/2) sits on the lower-right edge, so use an interior point instead
    assert on_cycle(example, P(1.5, 0.5))
    with pytest.raises(NotOnCycle):
        third_point_oracle(example_chart, 3, P(1.5, 1), P(1.5, 1))


def test_curves_fixture_is_consistent():
    assert len(CURVES) >= 5
    for values in CURVES.values():
        assert len(terms_of(values)) >= 7

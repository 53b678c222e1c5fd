from __future__ import annotations

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from tropqrt import CurveParams, Point, arc_point, cycle_chart

sys.path.insert(0, str(Path(__file__).parent))

F = Fraction

EXAMPLE = [None, 0, 0, -1, 0, -1, None, -2, -2, None]
STRICT = [5, 3, 3, 0, 1, 0, -4, -3, -3, -4]
IRREGULAR = {
    "strict-irregular": [None, 2, 2, -2, 0, -1, None, F(-11, 2), -4, None],
    "wide": [None, F(-3, 2), -2, F(-5, 2), 0, F(-9, 2), None, F(-11, 2), F(-7, 2), F(-17, 2)],
    "all-finite": [F(-3, 4), -1, 2, F(-7, 2), 0, F(-1, 2), F(-19, 2), F(-11, 2), F(-7, 2), F(-11, 2)],
    "a6-finite": [None, F(1, 2), -1, F(-5, 2), 0, F(-7, 2), -8, F(-9, 2), -6, None],
}


def translate(values, u, w):
    """Coefficients of the same curve shifted by (u, w)."""
    from oracles import EXPS

    return [None if a is None else F(a) - i * u - j * w for (i, j), a in zip(EXPS, values)]


CURVES = {
    "example": EXAMPLE,
    "strict": STRICT,
    **IRREGULAR,
    "shifted": translate(IRREGULAR["wide"], F(1, 3), F(-2, 7)),
}


def P(x, y) -> Point:
    return Point.of(x, y)


@pytest.fixture
def example():
    return CurveParams.from_values(EXAMPLE)


@pytest.fixture
def example_chart(example):
    return cycle_chart(example)


@pytest.fixture(params=sorted(CURVES))
def any_curve(request):
    c = CurveParams.from_values(CURVES[request.param])
    return c, cycle_chart(c)


def random_arc(rng: random.Random, total: Fraction, den: int = 60) -> Fraction:
    return Fraction(rng.randrange(int(total * den)), den)


def random_cycle_point(rng: random.Random, chart, den: int = 60) -> Point:
    return arc_point(chart, random_arc(rng, chart.total, den))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])

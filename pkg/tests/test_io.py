import io
import json
import re
from fractions import Fraction

import pytest
from conftest import P
from hypothesis import given
from hypothesis import strategies as st

from tropqrt import NotOnCycle, ParseError, orbit
from tropqrt.io import bundled_path, emit_orbit_csv, emit_svg, format_rational, load_scenario, parse_scenario

DOC = json.loads(bundled_path().read_text())


def _text(**changes):
    doc = json.loads(json.dumps(DOC))
    for key, value in changes.items():
        doc[key] = value
    return json.dumps(doc)


def _csv(o):
    buf = io.StringIO()
    emit_orbit_csv(o, buf)
    return buf.getvalue()


def _svg(s, o=None, bbox=(-1, -1, 3, 3)):
    buf = io.StringIO()
    emit_svg(s.curve, s.chart, o, bbox, buf)
    return buf.getvalue()


def test_bundled_scenario():
    s = load_scenario(bundled_path())
    assert (s.theta, s.t, s.p0, s.steps) == (P(0, 0.5), P(0.5, 0), P(0.2, 0), 12)
    assert s.p0.x == Fraction(1, 5)
    assert s.bbox == (-1, -1, 3, 3)
    assert [s.curve[i] for i in (0, 6, 9)] == [None, None, None]


def test_off_cycle_point_reports_argmax():
    with pytest.raises(NotOnCycle) as err:
        parse_scenario(_text(p0=[1, 1]))
    assert err.value.argmax == {(1, 1)}
    assert "(1, 1)" in str(err.value)


@pytest.mark.parametrize(
    "change",
    [
        {"curve": {"a": [None, None, 0, -1, 0, -1, None, -2, -2, None]}},
        {"curve": {"a": [None, 0, 0, -1, 0, -1, None, -2, -2]}},
        {"curve": {"a": [None, "1/0", 0, -1, 0, -1, None, -2, -2, None]}},
        {"curve": {"a": [None, "x", 0, -1, 0, -1, None, -2, -2, None]}},
        {"theta": [0]},
        {"steps": -1},
        {"steps": 1.5},
        {"bbox": [0, 0, 1]},
    ],
)
def test_malformed_documents(change):
    with pytest.raises(ParseError):
        parse_scenario(_text(**change))


def test_not_json():
    with pytest.raises(ParseError):
        parse_scenario("{")


def test_string_rationals_and_decimals_agree():
    s = parse_scenario(_text(p0=["1/5", "0"], theta=["0", 0.5]))
    assert s.p0 == P(0.2, 0) and s.theta == P(0, 0.5)


def test_csv_rows():
    o = orbit(load_scenario(bundled_path()))
    lines = _csv(o).split("\n")
    assert lines[0] == "n,x,y,s,on_cycle"
    assert lines[1] == "0,1/5,0,1/5,true"
    assert lines[2] == "1,6/5,1/5,6/5,true"
    assert lines[7].split(",", 1)[1] == lines[1].split(",", 1)[1]
    assert lines[-1] == "" and len(lines) == 1 + 13 + 1


def test_csv_zero_steps():
    o = orbit(load_scenario(bundled_path()), steps=0)
    assert _csv(o) == "n,x,y,s,on_cycle\n0,1/5,0,1/5,true\n"


@given(st.fractions(max_denominator=10**6))
def test_rationals_round_trip(q):
    assert Fraction(format_rational(q)) == q
    assert re.fullmatch(r"-?\d+(/\d+)?", format_rational(q))


def test_svg_curve_only():
    svg = _svg(load_scenario(bundled_path()))
    assert svg.startswith('<?xml version="1.0"')
    assert 'viewBox="0 0 480 480"' in svg
    assert svg.count('class="cycle"') == 6
    assert svg.count('class="tentacle"') == 6
    assert 'class="orbit"' not in svg


def test_svg_with_orbit():
    s = load_scenario(bundled_path())
    svg = _svg(s, orbit(s))
    assert svg.count('<circle class="orbit"') == 6
    assert svg == _svg(s, orbit(s))


def test_svg_rejects_empty_bbox():
    s = load_scenario(bundled_path())
    with pytest.raises(ValueError):
        _svg(s, bbox=(0, 0, 0, 1))

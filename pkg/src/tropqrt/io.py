"""Scenario files, CSV orbit tables and SVG plots.

Scenario files are JSON::

    {
      "curve": {"a": [null, 0, 0, -1, 0, -1, null, -2, -2, null]},
      "theta": [0, 0.5], "t": [0.5, 0], "p0": [0.2, 0],
      "steps": 12,
      "bbox": [-1, -1, 3, 3]
    }

Each number may be a JSON number (decimals are read exactly, so ``0.2`` is
``1/5``) or a string ``"p/q"``. ``null`` means ``-inf`` and is only accepted
for a0, a6 and a9. ``bbox`` is optional.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import TextIO

from .core import Point, as_fraction
from .curve import CENTER, OPTIONAL, CurveParams, CycleChart, corner_locus
from .errors import ParseError
from .qrt import OrbitRecord, Scenario

BUNDLED = {"paper": "paper.json"}


def bundled_path(name: str = "paper") -> Path:
    """Filesystem path of a scenario shipped with the package."""
    return Path(str(resources.files("tropqrt") / "data" / BUNDLED[name]))


def _rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or value is None:
        raise ParseError(f"{where}: expected a rational, got {json.dumps(value)}")
    try:
        return as_fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: bad rational literal {value!r}") from exc


def _point(doc: dict, key: str) -> Point:
    if key not in doc:
        raise ParseError(f"missing key {key!r}")
    value = doc[key]
    if not isinstance(value, list) or len(value) != 2:
        raise ParseError(f"{key}: expected a two-element array")
    return Point(_rational(value[0], f"{key}[0]"), _rational(value[1], f"{key}[1]"))


def parse_curve(doc) -> CurveParams:
    if not isinstance(doc, dict) or not isinstance(doc.get("a"), list):
        raise ParseError('curve: expected {"a": [...]}')
    raw = doc["a"]
    if len(raw) != 10:
        raise ParseError(f"curve.a: expected 10 coefficients, got {len(raw)}")
    values = []
    for i, v in enumerate(raw):
        if v is None:
            if i not in OPTIONAL:
                raise ParseError(f"curve.a[{i}] may not be null (only a0, a6, a9 may be -inf)")
            values.append(None)
        else:
            values.append(_rational(v, f"curve.a[{i}]"))
    return CurveParams.from_values(values)


def parse_scenario(text: str) -> Scenario:
    """Parse and validate a scenario document.

    Raises :class:`ParseError` for malformed input and
    :class:`~tropqrt.errors.NotOnCycle` if theta, t or p0 is off the cycle.
    """
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("scenario must be a JSON object")
    if "curve" not in doc:
        raise ParseError("missing key 'curve'")
    curve = parse_curve(doc["curve"])
    steps = doc.get("steps", 0)
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 0:
        raise ParseError(f"steps: expected a nonnegative integer, got {steps!r}")
    bbox = None
    if doc.get("bbox") is not None:
        box = doc["bbox"]
        if not isinstance(box, list) or len(box) != 4:
            raise ParseError("bbox: expected [xmin, ymin, xmax, ymax]")
        bbox = tuple(_rational(v, f"bbox[{i}]") for i, v in enumerate(box))
        if not (bbox[0] < bbox[2] and bbox[1] < bbox[3]):
            raise ParseError(f"bbox: empty box {box}")
    return Scenario(
        curve=curve,
        theta=_point(doc, "theta"),
        t=_point(doc, "t"),
        p0=_point(doc, "p0"),
        steps=steps,
        bbox=bbox,
    )


def load_scenario(path: str | Path) -> Scenario:
    return parse_scenario(Path(path).read_text(encoding="utf-8"))


# -- CSV ------------------------------------------------------------------------


def format_rational(q: Fraction) -> str:
    return str(q)


def emit_orbit_csv(o: OrbitRecord, sink: TextIO) -> None:
    """Write ``n,x,y,s,on_cycle`` rows with exact ``p/q`` rationals and LF endings."""
    lines = ["n,x,y,s,on_cycle"]
    for n, (p, s, flag) in enumerate(zip(o.points, o.arcs, o.on_cycle_flags)):
        lines.append(
            f"{n},{format_rational(p.x)},{format_rational(p.y)},{format_rational(s)},"
            f"{'true' if flag else 'false'}"
        )
    sink.write("\n".join(lines) + "\n")


# -- SVG ------------------------------------------------------------------------


def default_bbox(chart: CycleChart) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Chart bounds padded by half the larger side, so the tentacles show."""
    xmin, ymin, xmax, ymax = chart.bounds()
    pad = max(xmax - xmin, ymax - ymin) / 2
    return xmin - pad, ymin - pad, xmax + pad, ymax + pad


def _fmt(v: float) -> str:
    out = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if out == "-0" else out


def emit_svg(
    c: CurveParams,
    chart: CycleChart,
    orbit: OrbitRecord | None,
    bbox,
    sink: TextIO,
    width: int = 480,
) -> None:
    """Draw the curve (cycle heavier than the tentacles) and, optionally, an orbit.

    Elements carry the classes ``cycle``, ``tentacle`` and ``orbit``. Output
    depends only on the inputs.
    """
    xmin, ymin, xmax, ymax = (as_fraction(b) for b in bbox)
    if not (xmin < xmax and ymin < ymax):
        raise ValueError(f"empty bounding box {tuple(bbox)}")
    scale = Fraction(width) / (xmax - xmin)
    height = (ymax - ymin) * scale

    def tx(x: Fraction) -> str:
        return _fmt(float((x - xmin) * scale))

    def ty(y: Fraction) -> str:
        return _fmt(float((ymax - y) * scale))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{_fmt(float(height))}" '
        f'viewBox="0 0 {width} {_fmt(float(height))}">',
        "<style>"
        ".cycle{stroke:#000;stroke-width:3;fill:none}"
        ".tentacle{stroke:#555;stroke-width:1;fill:none}"
        ".orbit{fill:#c00}"
        ".label{font:11px sans-serif;fill:#c00}"
        "</style>",
        f'<rect x="0" y="0" width="{width}" height="{_fmt(float(height))}" fill="#fff"/>',
    ]
    pieces = corner_locus(c, (xmin, ymin, xmax, ymax))
    for piece in sorted(pieces, key=lambda pc: (CENTER not in pc.terms, pc.terms)):
        cls = "cycle" if CENTER in piece.terms else "tentacle"
        out.append(
            f'<line class="{cls}" x1="{tx(piece.start.x)}" y1="{ty(piece.start.y)}" '
            f'x2="{tx(piece.end.x)}" y2="{ty(piece.end.y)}"/>'
        )
    if orbit is not None:
        first: dict[Point, int] = {}
        for n, p in enumerate(orbit.points):
            first.setdefault(p, n)
        for p, n in first.items():
            if not (xmin <= p.x <= xmax and ymin <= p.y <= ymax):
                continue
            out.append(f'<circle class="orbit" cx="{tx(p.x)}" cy="{ty(p.y)}" r="4"><title>P({n}) = {p}</title></circle>')
            out.append(f'<text class="label" x="{tx(p.x)}" y="{ty(p.y)}" dx="6" dy="-6">{n}</text>')
    out.append("</svg>")
    sink.write("\n".join(out) + "\n")

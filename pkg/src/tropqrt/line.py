"""Tropical lines ``max(x + cx, y + cy, c0)``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Point, RationalLike, TropPolynomial, as_fraction


@dataclass(frozen=True)
class TropLine:
    """Corner locus of ``max(x + cx, y + cy, c0)``: rays down, left and along (1, 1)."""

    cx: Fraction
    cy: Fraction
    c0: Fraction

    def __post_init__(self) -> None:
        for name in ("cx", "cy", "c0"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @classmethod
    def with_vertex(cls, x: RationalLike, y: RationalLike) -> TropLine:
        return cls(-as_fraction(x), -as_fraction(y), Fraction(0))

    @property
    def vertex(self) -> Point:
        return vertex_of(self)

    def polynomial(self) -> TropPolynomial:
        return TropPolynomial.from_coefficients({(1, 0): self.cx, (0, 1): self.cy, (0, 0): self.c0})


def line_through(p: Point, q: Point) -> TropLine:
    """The line through ``p`` and ``q``.

    When ``p - q`` is parallel to (1, 0), (0, 1) or (1, 1), or ``p == q``, the
    vertex lands on the coordinatewise larger of the two points.
    """
    return TropLine(max(p.y, q.y), max(p.x, q.x), max(p.x + q.y, q.x + p.y))


def vertex_of(line: TropLine) -> Point:
    return Point(line.c0 - line.cx, line.c0 - line.cy)


def point_on_line(line: TropLine, p: Point) -> bool:
    a = p.x + line.cx
    b = p.y + line.cy
    c = line.c0
    top = max(a, b, c)
    return (a == top) + (b == top) + (c == top) >= 2

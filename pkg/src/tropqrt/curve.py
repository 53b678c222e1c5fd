"""The ten-coefficient cubic family and its hexagonal cycle.

The curve is the corner locus of

    max(a0, x+a1, y+a2, 2x+a3, x+y+a4, 2y+a5, 3x+a6, 2x+y+a7, x+2y+a8, 3y+a9)

and the group law lives on the boundary of the region where ``x+y+a4`` wins.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import NamedTuple, Sequence

from .core import (
    Exponent,
    Point,
    RationalLike,
    TropMonomial,
    TropPolynomial,
    TropScalar,
    as_fraction,
)
from .errors import DegenerateCycle, VertexOutsideRegion

EXPONENTS: tuple[Exponent, ...] = (
    (0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3),
)
CENTER = (1, 1)
OPTIONAL = (0, 6, 9)  # coefficients allowed to be -inf

# Counterclockwise from the bottom-left vertex.
EDGE_DIRECTIONS: tuple[tuple[int, int], ...] = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))

STRICT_CHAINS: tuple[tuple[int, ...], ...] = (
    (0, 1, 3, 6),
    (0, 2, 5, 9),
    (1, 4, 8),
    (2, 4, 7),
    (3, 7),
    (5, 8),
)


@dataclass(frozen=True)
class CurveParams:
    coeffs: tuple[TropScalar, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(TropScalar.of(c) for c in self.coeffs)
        if len(coeffs) != 10:
            raise ValueError(f"expected 10 coefficients, got {len(coeffs)}")
        for i, c in enumerate(coeffs):
            if not c.is_finite and i not in OPTIONAL:
                raise ValueError(f"a{i} must be finite (only a0, a6, a9 may be -inf)")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_values(cls, values: Sequence[RationalLike | TropScalar | None]) -> CurveParams:
        """Build from ten numbers; ``None`` stands for ``-inf``."""
        return cls(tuple(TropScalar.of(v) for v in values))

    def __getitem__(self, i: int) -> Fraction | None:
        return self.coeffs[i].value

    @cached_property
    def polynomial(self) -> TropPolynomial:
        return TropPolynomial(
            tuple(TropMonomial(i, j, c) for (i, j), c in zip(EXPONENTS, self.coeffs))
        )

    @cached_property
    def _integer_terms(self) -> tuple[int, tuple[tuple[int, int, int], ...]]:
        # coefficients over a common denominator, so argmax compares integers
        vals = [c.value for c in self.coeffs if c.value is not None]
        den = 1
        for v in vals:
            den = den * v.denominator // gcd(den, v.denominator)
        return den, tuple(
            (i, j, c.value.numerator * (den // c.value.denominator))
            for (i, j), c in zip(EXPONENTS, self.coeffs)
            if c.value is not None
        )

    @cached_property
    def exit_constants(self) -> tuple[Fraction, ...]:
        """``(a1-a4, a3-a4, a2-a4, a5-a4, a4-a7, a4-a8)``, the offsets the ray exits use."""
        a1, a2, a3, a4, a5, a7, a8 = (self[i] for i in (1, 2, 3, 4, 5, 7, 8))
        return a1 - a4, a3 - a4, a2 - a4, a5 - a4, a4 - a7, a4 - a8

    def argmax(self, p: Point) -> frozenset[Exponent]:
        cden, terms = self._integer_terms
        x, y = Fraction(p.x), Fraction(p.y)
        xd, yd = x.denominator, y.denominator
        den = cden * xd // gcd(cden, xd)
        den = den * yd // gcd(den, yd)
        k = den // cden
        xn, yn = x.numerator * (den // xd), y.numerator * (den // yd)
        best = None
        found: list[Exponent] = []
        for i, j, c in terms:
            val = c * k + i * xn + j * yn
            if best is None or val > best:
                best, found = val, [(i, j)]
            elif val == best:
                found.append((i, j))
        return frozenset(found)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


def on_curve(c: CurveParams, p: Point) -> bool:
    return len(c.argmax(p)) >= 2


def on_cycle(c: CurveParams, p: Point) -> bool:
    am = c.argmax(p)
    return CENTER in am and len(am) >= 2


def in_center_region(c: CurveParams, p: Point) -> bool:
    """True on the closed region where ``x+y+a4`` attains the maximum."""
    return CENTER in c.argmax(p)


# -- smoothness chains --------------------------------------------------------


class Comparison(NamedTuple):
    left: int
    right: int
    holds: bool
    vacuous: bool


@dataclass(frozen=True)
class StrictReport:
    chains: tuple[tuple[Comparison, ...], ...]

    @property
    def passed(self) -> bool:
        return all(cmp.holds for chain in self.chains for cmp in chain)

    def violations(self) -> list[tuple[int, int]]:
        return [(cmp.left, cmp.right) for chain in self.chains for cmp in chain if not cmp.holds]

    def lines(self) -> list[str]:
        out = []
        for chain in self.chains:
            parts = []
            for cmp in chain:
                tag = "ok" if cmp.holds else "FAIL"
                if cmp.vacuous:
                    tag = "vacuous"
                parts.append(f"a{cmp.left}>a{cmp.right}:{tag}")
            out.append("  ".join(parts))
        return out


def validate_strict(c: CurveParams) -> StrictReport:
    """Check the sufficient smoothness chains comparison by comparison.

    A comparison with ``-inf`` on the right holds vacuously; a chain that
    starts at ``a0 = -inf`` drops its first comparison.
    """
    chains = []
    for chain in STRICT_CHAINS:
        cmps = []
        idx = list(chain)
        if idx[0] == 0 and not c.coeffs[0].is_finite:
            idx = idx[1:]
        for left, right in zip(idx, idx[1:]):
            lv, rv = c.coeffs[left], c.coeffs[right]
            if not rv.is_finite:
                cmps.append(Comparison(left, right, True, True))
            else:
                cmps.append(Comparison(left, right, lv > rv, False))
        chains.append(tuple(cmps))
    return StrictReport(tuple(chains))


# -- the cycle ------------------------------------------------------------------


@dataclass(frozen=True)
class CycleChart:
    vertices: tuple[Point, ...]
    edge_lengths: tuple[Fraction, ...]
    cum: tuple[Fraction, ...] = field(init=False)
    total: Fraction = field(init=False)

    def __post_init__(self) -> None:
        cum = [Fraction(0)]
        for length in self.edge_lengths[:-1]:
            cum.append(cum[-1] + length)
        object.__setattr__(self, "cum", tuple(cum))
        object.__setattr__(self, "total", sum(self.edge_lengths, Fraction(0)))

    @property
    def basepoint(self) -> Point:
        return self.vertices[0]

    def edges(self):
        """Yield ``(start, direction, length, cumulative offset)`` for each edge."""
        return zip(self.vertices, EDGE_DIRECTIONS, self.edge_lengths, self.cum)

    def bounds(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


def cycle_chart(c: CurveParams) -> CycleChart:
    """Hexagonal boundary of the ``x+y+a4`` region, counterclockwise from bottom-left.

    Raises :class:`DegenerateCycle` when an edge collapses, or when one of the
    optional corner terms (a0, a6, a9) cuts into the hexagon.
    """
    a1, a2, a3, a4, a5, a7, a8 = (c[i] for i in (1, 2, 3, 4, 5, 7, 8))
    vertices = (
        Point(a2 - a4, a1 - a4),
        Point(a1 - a3, a1 - a4),
        Point(a4 - a7, a3 - a7),
        Point(a4 - a7, a4 - a8),
        Point(a5 - a8, a4 - a8),
        Point(a2 - a4, a2 - a5),
    )
    lengths = (
        (a1 - a3) - (a2 - a4),
        (a4 - a7) - (a1 - a3),
        (a4 - a8) - (a3 - a7),
        (a4 - a7) - (a5 - a8),
        (a5 - a8) - (a2 - a4),
        (a2 - a5) - (a1 - a4),
    )
    for k, length in enumerate(lengths):
        if length <= 0:
            raise DegenerateCycle(k, length)
    # The region is convex, so checking the vertices is enough.
    for k, v in enumerate(vertices):
        center = a4 + v.x + v.y
        for idx in OPTIONAL:
            coeff = c[idx]
            if coeff is None:
                continue
            i, j = EXPONENTS[idx]
            if coeff + i * v.x + j * v.y > center:
                raise DegenerateCycle(
                    k, reason=f"term a{idx} exceeds x+y+a4 at vertex {k} {v}"
                )
    return CycleChart(vertices, lengths)


# -- rays from an interior vertex ---------------------------------------------


class ExitTriple(NamedTuple):
    r1: Point  # straight down
    r2: Point  # straight left
    r3: Point  # along (1, 1)


def ray_exits(c: CurveParams, v: Point) -> ExitTriple:
    """Points where the three rays of a tropical line with vertex ``v`` leave the a4 region."""
    if not in_center_region(c, v):
        raise VertexOutsideRegion(v)
    b1, b3, b2, b5, b7, b8 = c.exit_constants
    vx, vy = v
    d = vx - vy
    r1 = Point(vx, max(b1, vx + b3))
    r2 = Point(max(b2, vy + b5), vy)
    r3 = Point(min(b7, d + b8), min(b8, b7 - d))
    return ExitTriple(r1, r2, r3)


# -- corner locus for plotting ------------------------------------------------


class LocusPiece(NamedTuple):
    start: Point
    end: Point
    terms: tuple[Exponent, Exponent]
    unbounded: bool  # a ray (or line) before clipping

    def contains(self, p: Point) -> bool:
        dx, dy = self.end.x - self.start.x, self.end.y - self.start.y
        px, py = p.x - self.start.x, p.y - self.start.y
        if dx * py - dy * px != 0:
            return False
        dot = dx * px + dy * py
        return 0 <= dot <= dx * dx + dy * dy


BBox = tuple[Fraction, Fraction, Fraction, Fraction]


def _tighten(lo, hi, alpha: Fraction, beta: Fraction):
    """Intersect [lo, hi] with {t : alpha + beta*t >= 0}; None bounds are infinite."""
    if beta == 0:
        return (lo, hi) if alpha >= 0 else None
    root = -alpha / beta
    if beta > 0:
        lo = root if lo is None or root > lo else lo
    else:
        hi = root if hi is None or root < hi else hi
    if lo is not None and hi is not None and lo > hi:
        return None
    return lo, hi


def corner_locus(f: TropPolynomial | CurveParams, bbox: Sequence[RationalLike]) -> list[LocusPiece]:
    """One-dimensional pieces of V(f) clipped to ``bbox = (xmin, ymin, xmax, ymax)``.

    Each piece is the set where a particular pair of terms ties for the
    maximum; pieces that clip to a point are dropped.
    """
    if isinstance(f, CurveParams):
        f = f.polynomial
    xmin, ymin, xmax, ymax = (as_fraction(b) for b in bbox)
    if not (xmin < xmax and ymin < ymax):
        raise ValueError(f"empty bounding box {tuple(bbox)}")
    terms = sorted(f.finite_terms())
    pieces = []
    for a in range(len(terms)):
        (ia, ja), ca = terms[a]
        for b in range(a + 1, len(terms)):
            (ib, jb), cb = terms[b]
            gx, gy = ia - ib, ja - jb
            g = gcd(gx, gy)
            dx, dy = -gy // g, gx // g
            rhs = cb - ca  # gx*x + gy*y = rhs on the tie line
            base = Point(rhs / gx, Fraction(0)) if gx else Point(Fraction(0), rhs / gy)
            va = ca + ia * base.x + ja * base.y
            interval = (None, None)
            for (ik, jk), ck in terms:
                if (ik, jk) in ((ia, ja), (ib, jb)):
                    continue
                alpha = va - (ck + ik * base.x + jk * base.y)
                beta = Fraction((ia - ik) * dx + (ja - jk) * dy)
                interval = _tighten(*interval, alpha, beta)
                if interval is None:
                    break
            if interval is None:
                continue
            lo, hi = interval
            if lo is not None and hi is not None and lo == hi:
                continue
            unbounded = lo is None or hi is None
            for coord, d, cmin, cmax in ((base.x, dx, xmin, xmax), (base.y, dy, ymin, ymax)):
                interval = _tighten(lo, hi, coord - cmin, Fraction(d))
                if interval is None:
                    break
                interval = _tighten(*interval, cmax - coord, Fraction(-d))
                if interval is None:
                    break
                lo, hi = interval
            if interval is None or lo >= hi:
                continue
            start = Point(base.x + lo * dx, base.y + lo * dy)
            end = Point(base.x + hi * dx, base.y + hi * dy)
            pieces.append(LocusPiece(start, end, ((ia, ja), (ib, jb)), unbounded))
    return pieces


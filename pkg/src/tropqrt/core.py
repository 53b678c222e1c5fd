"""Max-plus scalars, points and two-variable tropical polynomials.

Everything is exact: finite values are :class:`fractions.Fraction` and the
bottom element is a dedicated :class:`TropScalar` variant rather than a float
``-inf``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union

RationalLike = Union[int, Fraction, str, float, Decimal]


def as_fraction(value: RationalLike) -> Fraction:
    """Convert ``value`` to an exact :class:`Fraction`.

    Floats go through their shortest decimal repr, so ``0.2`` becomes ``1/5``
    rather than the binary expansion. Strings accept ``"3"``, ``"0.25"`` and
    ``"p/q"``.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"{value!r} is not a finite rational")
        return Fraction(repr(value))
    if isinstance(value, (str, Decimal)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


@functools.total_ordering
@dataclass(frozen=True, eq=True)
class TropScalar:
    """Element of the max-plus semiring: a rational, or ``-inf`` when ``value is None``."""

    value: Fraction | None = None

    def __post_init__(self) -> None:
        if self.value is not None and not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", as_fraction(self.value))

    @classmethod
    def of(cls, value: TropScalar | RationalLike | None) -> TropScalar:
        if isinstance(value, TropScalar):
            return value
        if value is None:
            return NEG_INF
        return cls(as_fraction(value))

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def finite(self) -> Fraction:
        if self.value is None:
            raise ValueError("-inf has no finite value")
        return self.value

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, TropScalar):
            return NotImplemented
        if self.value is None:
            return other.value is not None
        if other.value is None:
            return False
        return self.value < other.value

    def __str__(self) -> str:
        return "-inf" if self.value is None else str(self.value)

    def __repr__(self) -> str:
        return f"TropScalar({self})"


NEG_INF = TropScalar(None)
ONE = TropScalar(Fraction(0))  # multiplicative identity


def trop_add(a: TropScalar, b: TropScalar) -> TropScalar:
    """Tropical sum: the maximum, with ``-inf`` as identity."""
    return a if a >= b else b


def trop_mul(a: TropScalar, b: TropScalar) -> TropScalar:
    """Tropical product: classical sum, with ``-inf`` absorbing."""
    if a.value is None or b.value is None:
        return NEG_INF
    return TropScalar(a.value + b.value)


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: RationalLike, y: RationalLike) -> Point:
        return cls(as_fraction(x), as_fraction(y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


Exponent = tuple[int, int]


@dataclass(frozen=True)
class TropMonomial:
    xexp: int
    yexp: int
    coeff: TropScalar

    def __post_init__(self) -> None:
        if self.xexp < 0 or self.yexp < 0:
            raise ValueError("exponents must be nonnegative")
        if not isinstance(self.coeff, TropScalar):
            object.__setattr__(self, "coeff", TropScalar.of(self.coeff))

    @property
    def exponent(self) -> Exponent:
        return (self.xexp, self.yexp)

    def evaluate(self, p: Point) -> TropScalar:
        if self.coeff.value is None:
            return NEG_INF
        return TropScalar(self.coeff.value + self.xexp * p.x + self.yexp * p.y)


@dataclass(frozen=True)
class TropPolynomial:
    terms: tuple[TropMonomial, ...]

    def __post_init__(self) -> None:
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        exps = [t.exponent for t in terms]
        if len(set(exps)) != len(exps):
            raise ValueError("monomial exponents must be pairwise distinct")
        if not any(t.coeff.is_finite for t in terms):
            raise ValueError("a tropical polynomial needs at least one finite coefficient")

    @classmethod
    def from_coefficients(
        cls, coeffs: Mapping[Exponent, TropScalar | RationalLike | None]
    ) -> TropPolynomial:
        return cls(tuple(TropMonomial(i, j, TropScalar.of(c)) for (i, j), c in coeffs.items()))

    def finite_terms(self) -> Iterable[tuple[Exponent, Fraction]]:
        for t in self.terms:
            if t.coeff.value is not None:
                yield t.exponent, t.coeff.value


def eval_poly(f: TropPolynomial, p: Point) -> tuple[TropScalar, frozenset[Exponent]]:
    """Return the value of ``f`` at ``p`` and the exponents of every maximising term.

    ``p`` lies on the tropical curve of ``f`` iff more than one term attains
    the maximum.
    """
    best: Fraction | None = None
    argmax: list[Exponent] = []
    for (i, j), c in f.finite_terms():
        val = c + i * p.x + j * p.y
        if best is None or val > best:
            best = val
            argmax = [(i, j)]
        elif val == best:
            argmax.append((i, j))
    return TropScalar(best), frozenset(argmax)

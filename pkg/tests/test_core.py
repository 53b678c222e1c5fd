from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropqrt import NEG_INF, Point, TropPolynomial, TropScalar, eval_poly, trop_add, trop_mul
from tropqrt.core import ONE, as_fraction

F = Fraction

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)
scalars = st.one_of(st.just(NEG_INF), rationals.map(TropScalar))

EXAMPLE = TropPolynomial.from_coefficients(
    {(1, 0): 0, (0, 1): 0, (1, 1): 0, (2, 0): -1, (0, 2): -1, (2, 1): -2, (1, 2): -2}
)


def test_trop_add_examples():
    assert trop_add(TropScalar(3), TropScalar(5)) == TropScalar(5)
    assert trop_add(NEG_INF, TropScalar(7)) == TropScalar(7)
    assert trop_add(TropScalar(F(1, 5)), TropScalar(F(1, 5))) == TropScalar(F(1, 5))


def test_trop_mul_examples():
    assert trop_mul(TropScalar(3), TropScalar(5)) == TropScalar(8)
    assert trop_mul(NEG_INF, TropScalar(7)) == NEG_INF
    assert trop_mul(ONE, TropScalar(F(1, 2))) == TropScalar(F(1, 2))


def test_neg_inf_is_unique_and_least():
    assert TropScalar(None) == NEG_INF
    assert TropScalar.of(None) is NEG_INF
    assert NEG_INF < TropScalar(-(10**9))
    assert not NEG_INF < NEG_INF
    assert str(NEG_INF) == "-inf"


def test_values_are_reduced():
    assert TropScalar(F(2, 4)).value == F(1, 2)
    assert TropScalar.of("2/4") == TropScalar.of(0.5)


@pytest.mark.parametrize(
    "raw, expected",
    [(0.2, F(1, 5)), ("0.25", F(1, 4)), ("3/9", F(1, 3)), (7, F(7)), (F(2, 3), F(2, 3))],
)
def test_as_fraction(raw, expected):
    assert as_fraction(raw) == expected


@pytest.mark.parametrize("raw", [True, float("nan"), float("inf"), object()])
def test_as_fraction_rejects(raw):
    with pytest.raises((TypeError, ValueError)):
        as_fraction(raw)


@given(scalars, scalars, scalars)
def test_semiring_laws(a, b, c):
    assert trop_add(a, b) == trop_add(b, a)
    assert trop_mul(a, b) == trop_mul(b, a)
    assert trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c))
    assert trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c))
    assert trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c))
    assert trop_add(a, NEG_INF) == a
    assert trop_mul(a, ONE) == a


def test_eval_poly_examples():
    value, am = eval_poly(EXAMPLE, Point.of(0.2, 0))
    assert value == TropScalar(F(1, 5))
    assert am == {(1, 0), (1, 1)}

    value, am = eval_poly(EXAMPLE, Point.of(1, 1))
    assert value == TropScalar(2)
    assert am == {(1, 1)}

    line = TropPolynomial.from_coefficients({(1, 0): 0, (0, 1): 0, (0, 0): 0})
    value, am = eval_poly(line, Point.of(0, 0))
    assert value == TropScalar(0)
    assert am == {(1, 0), (0, 1), (0, 0)}


@given(rationals, rationals)
def test_eval_poly_matches_termwise_scan(x, y):
    p = Point(x, y)
    vals = {t.exponent: t.coeff.value + t.xexp * x + t.yexp * y for t in EXAMPLE.terms}
    top = max(vals.values())
    value, am = eval_poly(EXAMPLE, p)
    assert value.value == top
    assert am == {e for e, v in vals.items() if v == top}


def test_neg_inf_term_never_dominates():
    f = TropPolynomial.from_coefficients({(0, 0): None, (1, 0): -100})
    assert eval_poly(f, Point.of(-1000, 0)) == (TropScalar(-1100), frozenset({(1, 0)}))


def test_polynomial_invariants():
    with pytest.raises(ValueError):
        TropPolynomial.from_coefficients({(0, 0): None})
    with pytest.raises(ValueError):
        TropPolynomial((EXAMPLE.terms[0], EXAMPLE.terms[0]))

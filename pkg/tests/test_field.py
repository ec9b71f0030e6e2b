from fractions import Fraction
from math import sqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxcone.field import (PHI, SQRT5, Quad, format_scalar, is_integer, parse_scalar, sign,
                           simplify, to_decimal)

small = st.integers(min_value=-40, max_value=40)
rationals = st.builds(lambda a, b: simplify(Fraction(a, b)), small,
                      st.integers(min_value=1, max_value=12))
quads = st.builds(lambda p, q, s: Quad.make(p, q, s), small, small,
                  st.integers(min_value=1, max_value=12))
scalars = st.one_of(rationals, quads)


def test_phi_squared():
    assert PHI * PHI == Quad(3, 1, 2)
    assert PHI * PHI == PHI + 1


def test_additive_identity_and_normalization():
    assert PHI + 0 == PHI
    assert simplify(Fraction(2, 4)) == Fraction(1, 2)
    assert Quad.make(4, 0, 2) == 2 and isinstance(Quad.make(4, 0, 2), int)
    assert Quad(2, 4, 6) == Quad(1, 2, 3)
    assert Quad(1, 1, -2) == Quad(-1, -1, 2)


def test_irrational_part_cancels_to_rational():
    x = SQRT5 - SQRT5
    assert x == 0 and not isinstance(x, Quad)
    assert isinstance(SQRT5 * SQRT5, int)


@pytest.mark.parametrize("x, expected", [
    (Quad(1, -1), -1),
    (0, 0),
    (Quad(-1, 1, 2), 1),
    (Quad(-2, 1), 1),   # sqrt5 > 2
    (Quad(-3, 1), -1),  # sqrt5 < 3
    (Fraction(-1, 3), -1),
])
def test_sign_examples(x, expected):
    assert sign(x) == expected


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        PHI / 0
    with pytest.raises(ZeroDivisionError):
        Quad(1, 1, 0)


def test_inverse():
    assert PHI * PHI.inverse() == 1
    assert 1 / PHI == PHI - 1


def test_equality_across_types():
    assert PHI != Fraction(1)
    assert hash(simplify(Fraction(6, 3))) == hash(2)


@pytest.mark.parametrize("text, value", [
    ("3", 3),
    ("-2/4", Fraction(-1, 2)),
    ("(1+1r5)/2", PHI),
    ("(0-1r5)", -SQRT5),
    (" ( -3 + 2r5 ) / 7 ", Quad(-3, 2, 7)),
    ("(4+0r5)/2", 2),
])
def test_parse(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "1.5", "r5", "(1+r5)", "1/0", "abc"])
def test_parse_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_scalar(bad)


def test_parse_rejects_non_string():
    with pytest.raises(TypeError):
        parse_scalar(3)


def test_format():
    assert format_scalar(PHI) == "(1+1r5)/2"
    assert format_scalar(-SQRT5) == "(0-1r5)"
    assert format_scalar(Fraction(2, 3)) == "2/3"
    assert format_scalar(7) == "7"


def test_is_integer():
    assert is_integer(3) and is_integer(Fraction(4, 2))
    assert not is_integer(Fraction(1, 2)) and not is_integer(PHI)


@given(scalars, scalars, scalars)
@settings(max_examples=300)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0
    if a != 0:
        assert a * (1 / a if not isinstance(a, int) else Fraction(1, a)) == 1


@given(scalars, scalars)
@settings(max_examples=300)
def test_sign_is_multiplicative(a, b):
    assert sign(a * b) == sign(a) * sign(b)


@given(scalars)
@settings(max_examples=300)
def test_sign_matches_float(a):
    f = to_decimal(a)
    if abs(f) > 1e-9:
        assert sign(a) == (1 if f > 0 else -1)


@given(scalars)
def test_text_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


def test_to_decimal():
    assert abs(to_decimal(PHI) - (1 + sqrt(5)) / 2) < 1e-12
    assert float(PHI) == to_decimal(PHI)

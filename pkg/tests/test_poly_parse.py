from fractions import Fraction

import pytest

from twoparity.errors import DivisionByZeroPoly, ParseError
from twoparity.parse import parse_cubic_coeffs, parse_poly, parse_rationals
from twoparity.poly import UniPoly, poly_divmod


def test_arithmetic_and_division():
    x = UniPoly.x()
    f = (x - 1) * (x - 2) * (x - 3)
    assert f == UniPoly((-6, 11, -6, 1))
    q, r = divmod(f, x * x + 1)
    assert q * (x * x + 1) + r == f
    assert r.degree < 2
    assert f.derivative() == UniPoly((11, -12, 3))
    assert f(Fraction(1, 2)) == Fraction(-15, 8)
    with pytest.raises(DivisionByZeroPoly):
        poly_divmod(f, UniPoly())


def test_zero_polynomial():
    assert UniPoly().degree == -1
    assert UniPoly((0, 0)).is_zero()


@pytest.mark.parametrize("text,coeffs", [
    ("(x-17)(x-1)(x-2)", (-20, 53, -34)),
    ("x^3 + x + 1", (0, 1, 1)),
    ("x**3 - 2", (0, 0, -2)),
    ("x^3 + x/4 + 1/8", (0, Fraction(1, 4), Fraction(1, 8))),
    ("(x-1)(x^2+x+1)", (0, 0, -1)),
    ("1/2, -3, 4", (Fraction(1, 2), -3, 4)),
    ("2x^2 + x^3 - 3x + 1", (2, -3, 1)),
])
def test_cubic_literals(text, coeffs):
    assert parse_cubic_coeffs(text) == tuple(Fraction(c) for c in coeffs)


@pytest.mark.parametrize("text,pos", [("x^3+x+", 6), ("x^3 + $", 6), ("(x-1", 4)])
def test_parse_error_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_poly(text)
    assert info.value.position == pos


def test_cubic_shape_errors():
    with pytest.raises(ParseError):
        parse_cubic_coeffs("2x^3 + 1")
    with pytest.raises(ParseError):
        parse_cubic_coeffs("x^2 + 1")
    with pytest.raises(ParseError):
        parse_cubic_coeffs("1,2")
    with pytest.raises(ParseError):
        parse_rationals("1,a,3")

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import hilbert_bruteforce, squarefree_int
from twoparity.arith import (
    COMPLEX_PLACE, REAL_PLACE, Place, hilbert, hilbert_places, is_square, legendre,
    prime_factors, product_formula_check, square_class, unit_part, valuation,
)
from twoparity.errors import NotAUnit, NotPrime, ZeroArgument

nonzero = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4).filter(bool)


def test_valuation_basics():
    assert valuation(Fraction(50), 5) == 2
    assert valuation(Fraction(3, 25), 5) == -2
    assert valuation(7, 2) == 0
    assert unit_part(Fraction(-75, 4), 5) == Fraction(-3, 4)
    with pytest.raises(Exception):
        valuation(0, 3)


def test_legendre_needs_unit():
    assert legendre(2, 7) == 1
    assert legendre(3, 7) == -1
    assert legendre(Fraction(1, 3), 7) == -1
    with pytest.raises(NotAUnit):
        legendre(14, 7)


def test_place_parsing_and_order():
    assert Place.parse("real") == REAL_PLACE
    assert Place.parse("complex") == COMPLEX_PLACE
    assert Place.parse("17") == Place.padic(17)
    assert Place.padic(17).to_json() == {"p": 17}
    assert sorted([Place.padic(5), REAL_PLACE, Place.padic(2)]) == [REAL_PLACE, Place.padic(2), Place.padic(5)]
    with pytest.raises(NotPrime):
        Place.padic(15)


def test_is_square():
    assert is_square(Fraction(9, 4), REAL_PLACE)
    assert not is_square(-1, REAL_PLACE)
    assert is_square(-1, COMPLEX_PLACE)
    assert is_square(17, Place.padic(2))      # 17 = 1 mod 8
    assert not is_square(5, Place.padic(2))
    assert is_square(-1, Place.padic(5))
    assert not is_square(5, Place.padic(5))


def test_hilbert_known_values():
    q3 = Place.padic(3)
    # the three factors for x^3 + x + 1 over Q_3
    assert hilbert(1, -1, q3) * hilbert(18, -31, q3) * hilbert(-9, -1, q3) == 1
    assert hilbert(-1, -1, REAL_PLACE) == -1
    assert hilbert(-1, -1, Place.padic(2)) == -1
    assert hilbert(2, 3, Place.padic(3)) == -1
    assert hilbert(-1, -1, COMPLEX_PLACE) == 1
    with pytest.raises(ZeroArgument):
        hilbert(0, 1, q3)


def test_square_class_against_sympy():
    for x in (Fraction(12), Fraction(-50, 9), Fraction(3, 8), Fraction(1)):
        assert square_class(x) == squarefree_int(x)


def test_prime_factors_include_denominators():
    assert prime_factors(Fraction(10, 21)) == [2, 3, 5, 7]


@settings(max_examples=200, deadline=None)
@given(nonzero, nonzero)
def test_hilbert_symmetric_and_reciprocal(a, b):
    for v in hilbert_places(a, b):
        assert hilbert(a, b, v) == hilbert(b, a, v)
        assert hilbert(a, -a, v) == 1
    assert len(product_formula_check(a, b)) % 2 == 0


@settings(max_examples=200, deadline=None)
@given(nonzero, nonzero, nonzero)
def test_hilbert_bilinear(a, b, c):
    for v in hilbert_places(a, b, c):
        assert hilbert(a * b, c, v) == hilbert(a, c, v) * hilbert(b, c, v)


@settings(max_examples=300, deadline=None)
@given(nonzero, nonzero, st.sampled_from([2, 3, 5, 7, 11]))
def test_hilbert_matches_bruteforce(a, b, p):
    v = Place.padic(p)
    assert hilbert(a, b, v) == hilbert_bruteforce(a, b, v)

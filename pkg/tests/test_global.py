from fractions import Fraction

import pytest

from twoparity.arith import REAL_PLACE, Place
from twoparity.curves import RationalCubic
from twoparity.errors import NotIntegral, StrictModeUnsupported
from twoparity.generators import random_cubic, random_rational_cubic, rng_for
from twoparity.globalparity import global_identity, global_product_H, relevant_places
from twoparity.local import error_term_H, local_report


def test_relevant_places_examples():
    assert relevant_places(RationalCubic(0, 1, 1)) == [REAL_PLACE] + [Place.padic(p) for p in (2, 3, 31)]
    assert Place.padic(17) in relevant_places(RationalCubic.from_roots(17, 1, 2))
    # 11 divides b and is kept on purpose
    assert relevant_places(RationalCubic.from_roots(1, 2, 3)) == [
        REAL_PLACE, Place.padic(2), Place.padic(3), Place.padic(11)]
    with pytest.raises(NotIntegral):
        relevant_places(RationalCubic(0, Fraction(1, 2), 1))


def test_outside_places_everything_trivial():
    for i in range(30):
        f = random_cubic(rng_for(5, i), 50)
        rel = set(relevant_places(f))
        for p in (3, 5, 7, 11, 13, 17, 19, 23):
            v = Place.padic(p)
            if v in rel:
                continue
            r = local_report(f, v)
            assert (r.H, r.lam, r.ww) == (1, 1, 1)


def test_product_formula():
    assert global_product_H(RationalCubic(0, 1, 1))[0] == 1
    prod, vec = global_product_H(RationalCubic.from_roots(17, 1, 2))
    assert prod == 1 and vec[Place.padic(17)] == 1
    for i in range(100):
        assert global_product_H(random_rational_cubic(rng_for(6, i)))[0] == 1


def test_extra_good_places_change_nothing():
    f = RationalCubic(0, 1, 1)
    prod, vec = global_product_H(f)
    extra = 1
    for p in (5, 7, 101):
        extra *= error_term_H(f, Place.padic(p))
    assert prod * extra == prod


def test_strict_mode_refuses_bad_2():
    with pytest.raises(StrictModeUnsupported) as info:
        global_identity(RationalCubic.from_roots(1, 2, 3), "strict")
    assert Place.padic(2) in info.value.places


def test_inferred_mode_example():
    g = global_identity(RationalCubic.from_roots(17, 1, 2), "inferred")
    assert g.all_identities and g.product_H == 1
    assert Place.padic(2) in g.inferred_places
    js = g.to_json()
    assert js["mode"] == "inferred" and js["product_lambda"]["mode"] == "inferred"


def test_strict_mode_always_meets_place_2():
    # Q_2 is always relevant and lambda there is not computed
    for i in range(20):
        with pytest.raises(StrictModeUnsupported):
            global_identity(random_cubic(rng_for(8, i), 100), "strict")


def test_inferred_mode_batch():
    for i in range(100):
        g = global_identity(random_cubic(rng_for(9, i), 1000), "inferred")
        assert g.all_identities

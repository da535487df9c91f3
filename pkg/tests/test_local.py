from fractions import Fraction

import pytest

from twoparity.arith import COMPLEX_PLACE, REAL_PLACE, Place, hilbert
from twoparity.clusters import I_MM, ROWS
from twoparity.curves import RationalCubic, scale
from twoparity.errors import CannotInfer, UnsupportedPlace
from twoparity.generators import random_cubic, real_case_cubic, rng_for, table2_cubic
from twoparity.local import (
    TABLE_1, error_term_H, infer_lambda, lambda_padic, lambda_real, local_report,
    root_numbers, table2_row,
)

EXAMPLE = RationalCubic.from_roots(17, 1, 2)
Q17 = Place.padic(17)


def test_error_term_examples():
    f = RationalCubic(0, 1, 1)
    q3 = Place.padic(3)
    assert error_term_H(f, q3) == hilbert(1, -1, q3) * hilbert(18, -31, q3) * hilbert(-9, -1, q3) == 1
    assert error_term_H(EXAMPLE, Q17) == 1
    # b = 0 uses the short branch
    assert error_term_H(RationalCubic(0, 0, 1), REAL_PLACE) == -1


def test_worked_example_report():
    r = local_report(EXAMPLE, Q17)
    p = r.payload
    assert (p.c_E, p.c_JacEprime, p.c_JacC, p.mu) == (1, 2, 1, 1)
    assert (r.w_E, r.w_JacEprime, r.lam, r.H) == (1, -1, -1, 1)
    assert p.type.label == "1_1^+"
    assert r.identity_holds
    js = r.to_json()
    assert js["place"] == {"p": 17} and js["identity"] is True and js["lambda"] == -1


@pytest.mark.parametrize("f,lam,ratio_case", [
    (RationalCubic.from_roots(1, 2, 3), -1, 1),
    (RationalCubic.from_roots(-1, -2, 1), 1, 3),
    (RationalCubic(0, 0, -2), -1, 5),
])
def test_lambda_real(f, lam, ratio_case):
    got, payload = lambda_real(f)
    assert got == lam and payload.case == ratio_case


def test_lambda_padic_examples():
    lam, p = lambda_padic(RationalCubic.from_roots(5, 1, 2), 5)
    assert lam == -1 and p.type.label == "1_1^-"
    lam, p = lambda_padic(RationalCubic.from_roots(1, 2, 27), 5)
    assert lam == -1 and (p.c_E, p.c_JacEprime, p.c_JacC) == (4, 2, 4)
    with pytest.raises(UnsupportedPlace):
        lambda_padic(EXAMPLE, 2)


def test_report_derived_example_at_5():
    r = local_report(RationalCubic.from_roots(5, 1, 2), Place.padic(5))
    assert (r.ww, r.lam, r.H) == (1, -1, -1) and r.identity_holds


def test_root_numbers():
    assert root_numbers(EXAMPLE, Q17) == (1, -1)
    assert root_numbers(random_cubic(rng_for(0, 0)), REAL_PLACE) == (-1, -1)
    f = table2_cubic(rng_for(1, 1), 7, 2, I_MM)
    assert root_numbers(f, Place.padic(7)) == (1, 1)
    with pytest.raises(UnsupportedPlace):
        root_numbers(EXAMPLE, Place.padic(2))


def test_complex_and_unsupported_reports():
    r = local_report(random_cubic(rng_for(0, 1)), COMPLEX_PLACE)
    assert (r.w_E, r.w_JacEprime, r.lam, r.H, r.identity_holds) == (-1, -1, 1, 1, True)
    r = local_report(RationalCubic.from_roots(1, 2, 3), Place.padic(2))
    assert not r.supported and r.lam is None and r.H in (1, -1)
    assert r.to_json()["support"] == {"unsupported": r.reason}


def test_table_encodings():
    for case, row in TABLE_1.items():
        n_E, n_J, n_JC, kernel, mu, lam, H = row
        assert lam * H == 1  # w*w = +1 at the real place
    for row in ROWS:
        for n in range(1, 7):
            e = table2_row(row, n)
            assert e["lam"] * e["H"] == e["ww"]


def test_infer_lambda():
    good = RationalCubic(0, 1, 1)
    assert infer_lambda(good, Place.padic(5)).value == 1
    inferred = infer_lambda(EXAMPLE, Q17)
    assert inferred.value == local_report(EXAMPLE, Q17).lam and inferred.provenance == "inferred"
    with pytest.raises(CannotInfer):
        infer_lambda(EXAMPLE, Place.padic(2))
    flagged = infer_lambda(EXAMPLE, Place.padic(2), ww=1)
    assert flagged.provenance == "inferred"
    assert flagged.value == error_term_H(EXAMPLE, Place.padic(2))


def test_identity_on_random_cubics():
    for i in range(150):
        f = random_cubic(rng_for(11, i), 300)
        for v in [REAL_PLACE] + [Place.padic(p) for p in (3, 5, 7, 11, 13)]:
            r = local_report(f, v)
            if r.supported:
                assert r.identity_holds, (f, v)


def test_real_branches_agree_near_b_zero():
    # b -> 0 with L != 0: main branch value equals the short branch once b is tiny
    for c in (Fraction(-3), Fraction(5), Fraction(7, 2)):
        for a in (Fraction(1), Fraction(-2)):
            short = error_term_H(RationalCubic(a, 0, c), REAL_PLACE)
            for eps in (Fraction(1, 10**6), Fraction(-1, 10**6)):
                assert error_term_H(RationalCubic(a, eps, c), REAL_PLACE) == short


def test_H_scaling_invariance():
    f = RationalCubic(3, -7, 11)
    for d in (Fraction(2), Fraction(-3, 5), Fraction(7, 4)):
        g = scale(f, d)
        for p in (2, 3, 5, 7, 11):
            assert error_term_H(f, Place.padic(p)) == error_term_H(g, Place.padic(p))
        assert error_term_H(f, REAL_PLACE) == error_term_H(g, REAL_PLACE)


def test_real_case_sweep_small():
    for case in range(1, 7):
        for i in range(20):
            r = local_report(real_case_cubic(rng_for(case, i), case), REAL_PLACE)
            assert r.payload.case == case and r.identity_holds

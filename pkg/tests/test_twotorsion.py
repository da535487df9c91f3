import itertools
from fractions import Fraction

import pytest

from twoparity.curves import RationalCubic
from twoparity.errors import BranchMismatch, NotSeparable
from twoparity.generators import mobius_pair, rng_for
from twoparity.poly import UniPoly
from twoparity.twotorsion import (
    BRANCHES, GENERAL, QUADRATIC_TWIST, XF_FORM, compose, is_identity_map, mobius_match,
    model_identity, normal_form, pair_generator, twisted_model_identity,
)


def test_identity_match():
    m = mobius_match((1, 2, 3), (1, 2, 3))
    assert m.B == 0 and m.C == 0 and m.A == m.D != 0
    assert m.branch == QUADRATIC_TWIST
    assert normal_form(m).d == 1


def test_translation_match():
    m = mobius_match((1, 2, 3), (2, 3, 4))
    assert m.C == 0 and m.branch == QUADRATIC_TWIST
    assert all(m.h(a) == a + 1 for a in (5, Fraction(1, 3)))
    assert normal_form(m).d == 1


def test_xf_form_match():
    m = mobius_match((1, 2, 3), (6, 3, 2))
    assert m.A == 2 * 3 + 3 * (-4) + 6 * 1 == 0
    nf = normal_form(m, UniPoly.from_roots((1, 2, 3)))
    assert nf.branch == XF_FORM
    assert nf.d == -1      # -C * 6 / B = -(-2) * 6 / (-12)
    assert nf.model == UniPoly.x() * UniPoly.from_roots((1, 2, 3))
    assert twisted_model_identity(m, nf)


def test_general_normal_form():
    m = mobius_match((1, 2, 5), (3, -7, 11))
    assert m.branch == GENERAL
    nf = normal_form(m)
    assert nf.monic.lead == 1 and nf.monic.degree == 3
    assert twisted_model_identity(m, nf)


def test_errors():
    with pytest.raises(NotSeparable):
        mobius_match((1, 1, 2), (1, 2, 3))
    m = mobius_match((1, 2, 3), (6, 3, 2))
    with pytest.raises(BranchMismatch):
        normal_form(m, branch=GENERAL)
    with pytest.raises(BranchMismatch):
        normal_form(m, UniPoly.from_roots((1, 2, 4)))


def test_model_identity_and_inverse_all_branches():
    for branch in BRANCHES:
        for i in range(40):
            alphas, betas = mobius_pair(rng_for(7, i, branch), branch)
            m = mobius_match(alphas, betas)
            assert m.branch == branch
            assert model_identity(m)
            assert is_identity_map(compose(mobius_match(betas, alphas), m))


def test_branch_stable_under_permutation():
    alphas, betas = mobius_pair(rng_for(1, 1), GENERAL)
    for perm in itertools.permutations(range(3)):
        m = mobius_match([alphas[i] for i in perm], [betas[i] for i in perm])
        assert m.branch == GENERAL


def test_gamma_pairs():
    f = RationalCubic.from_roots(1, 2, 3)
    first = next(pair_generator(f, 0))
    assert first[3] == (-6, -3, -2)           # gamma = 0 gives the Jac E' roots
    g = RationalCubic.from_roots(1, 2, 3)
    from twoparity.twotorsion import gamma_pair
    assert sorted(gamma_pair(g, 1)[1]) == [-12, -8, -6]
    for _, _, alphas, betas in itertools.islice(pair_generator(f, 5), 100):
        m = mobius_match(alphas, betas)
        assert all(m.h(a) == b for a, b in zip(alphas, betas))
        assert model_identity(m)

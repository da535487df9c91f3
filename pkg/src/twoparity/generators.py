"""Seeded constructors for test and verification inputs.

Every stream is driven by ``random.Random`` seeded from a string, so a
``(seed, index)`` pair always reproduces the same cubic regardless of how the
work is split across processes.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .arith import legendre, valuation
from .clusters import (
    I_A, I_B, I_MM, I_PP, ONE_N_MINUS, ONE_N_PLUS, ROWS, TYPE_2, real_configuration,
)
from .curves import RationalCubic, discriminant
from .errors import NotSeparable, RootAtZero
from .twotorsion import GENERAL, QUADRATIC_TWIST, XF_FORM

# residue signs (sign_E, sign_Eprime) required by each two-root-twin row
_I_SIGNS = {I_PP: (1, 1), I_A: (1, -1), I_B: (-1, 1), I_MM: (-1, -1)}


def rng_for(seed, index, stream: str = "") -> random.Random:
    return random.Random(f"{stream}{seed}/{index}")


def random_cubic(rng: random.Random, height: int = 100) -> RationalCubic:
    """Uniform integral ``(a, b, c)`` in ``[-height, height]^3`` with ``c, disc != 0``."""
    while True:
        a, b, c = (rng.randint(-height, height) for _ in range(3))
        if c != 0 and discriminant(a, b, c) != 0:
            return RationalCubic(a, b, c)


def random_rational(rng: random.Random, height: int = 20, nonzero: bool = True) -> Fraction:
    while True:
        x = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if x or not nonzero:
            return x


def random_rational_cubic(rng: random.Random, height: int = 20) -> RationalCubic:
    """Cubic with small rational (often non-integral) coefficients."""
    while True:
        a, b, c = (random_rational(rng, height, nonzero=False) for _ in range(3))
        if c != 0 and discriminant(a, b, c) != 0:
            return RationalCubic(a, b, c)


def split_cubic(rng: random.Random, height: int = 30) -> RationalCubic:
    while True:
        roots = {rng.randint(-height, height) for _ in range(3)}
        if len(roots) == 3 and 0 not in roots:
            return RationalCubic.from_roots(*roots)


# ---------------------------------------------------------------- real cases

_SIGNS = {1: (1, 1, 1), 2: (1, 1, -1), 3: (1, -1, -1), 4: (-1, -1, -1)}


def _quick_case(f: RationalCubic) -> int:
    """Real case from the discriminant sign and Descartes' rule.

    With three real roots the number of sign changes in the coefficients is
    exactly the number of positive roots.  With one real root its sign is
    that of ``-c``.
    """
    if f.delta < 0:
        return 5 if f.c < 0 else 6
    signs = [s for s in (1, f.a, f.b, f.c) if s != 0]
    changes = sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))
    return 4 - changes


def real_case_cubic(rng: random.Random, case: int, height: int = 30) -> RationalCubic:
    """Random cubic in the given real case.

    Alternates between planted rational roots (or a rational root times a
    definite quadratic) and rejection sampling of raw coefficients, so
    irreducible cubics are covered as well.
    """
    if case not in range(1, 7):
        raise ValueError(f"real case must be 1..6, got {case}")
    if rng.random() < 0.5:
        for _ in range(400):
            f = random_cubic(rng, height)
            if _quick_case(f) == case and real_configuration(f).case_id == case:
                return f
    while True:
        try:
            if case <= 4:
                roots = {s * rng.randint(1, height) * Fraction(1, rng.randint(1, 3))
                         for s in _SIGNS[case]}
                if len(roots) == 3:
                    return RationalCubic.from_roots(*roots)
            else:
                r = rng.randint(1, height) * (1 if case == 5 else -1)
                sigma = rng.randint(-height, height)
                pi = sigma * sigma // 4 + rng.randint(1, height)  # sigma^2 < 4 pi
                return RationalCubic.from_linear_quadratic(r, sigma, pi)
        except (NotSeparable, RootAtZero):
            continue


# ---------------------------------------------------------- Table 2 rows

def _unit(rng, p, height, square=None):
    """Random integer prime to p, optionally with prescribed quadratic character."""
    while True:
        u = rng.randint(1, height * p) * rng.choice((1, -1))
        if u % p == 0:
            continue
        if square is None or legendre(u, p) == square:
            return u


def _nonsquare_unit(rng, p, height):
    return _unit(rng, p, height, square=-1)


def table2_cubic(rng: random.Random, p: int, n: int, row: str, height: int = 20) -> RationalCubic:
    """Integral cubic whose reduction at the odd prime ``p`` is the given row with parameter n."""
    if row not in ROWS:
        raise ValueError(f"unknown row {row!r}")
    for _ in range(10000):
        try:
            f = _attempt(rng, p, n, row, height)
        except (NotSeparable, RootAtZero):
            continue
        if f is not None:
            return f
    raise RuntimeError(f"could not build row {row} at p={p}, n={n}")


def _attempt(rng, p, n, row, height):
    if row == TYPE_2:
        f = random_cubic(rng, height * p)
        if valuation(f.c, p) == 0 and valuation(f.delta, p) == 0:
            return f
        return None
    if row in (ONE_N_PLUS, ONE_N_MINUS):
        return _zero_twin(rng, p, n, 1 if row == ONE_N_PLUS else -1, height)
    return _root_pair(rng, p, n, *_I_SIGNS[row], height)


def _zero_twin(rng, p, n, sign, height):
    """Root ``p^n u`` plus two roots distinct and nonzero mod p whose product has character ``sign``."""
    alpha = p**n * _unit(rng, p, height)
    if rng.random() < 0.5:
        r2 = _unit(rng, p, height)
        r3 = _unit(rng, p, height, square=sign * legendre(r2, p))
        if (r2 - r3) % p == 0:
            return None
        return RationalCubic.from_roots(alpha, r2, r3)
    # irreducible quadratic x^2 - sigma x + pi with pi of character sign
    pi = _unit(rng, p, height, square=sign)
    sigma = rng.randint(-height * p, height * p)
    disc = sigma * sigma - 4 * pi
    if disc % p == 0:
        return None
    return RationalCubic.from_linear_quadratic(alpha, sigma, pi)


def _root_pair(rng, p, n, sign_E, sign_Ep, height):
    """Third root ``t`` and a twin centred at ``s`` with ``v(twin diff^2) = n``.

    ``s - t`` gets character ``sign_E`` and ``s`` gets ``sign_E * sign_Ep``, so
    ``s (s - t)`` has character ``sign_Ep`` as the twin signs require.
    """
    s = _unit(rng, p, height, square=sign_E * sign_Ep)
    d = _unit(rng, p, height, square=sign_E)
    t = s - d
    if t % p == 0:
        return None
    if n % 2 == 0 and rng.random() < 0.5:
        e = p ** (n // 2) * _unit(rng, p, height)
        return RationalCubic.from_roots(t, s + e, s - e)
    # twin as roots of x^2 - 2 s x + (s^2 - p^n u) with p^n u not a square in Q
    u = _nonsquare_unit(rng, p, height) if n % 2 == 0 else _unit(rng, p, height)
    return RationalCubic.from_linear_quadratic(t, 2 * s, s * s - p**n * u)


# ---------------------------------------------------------- continuity

def perturbation_exponent(f: RationalCubic, p: int, margin: int = 10) -> int:
    """``v_p(disc) + v_p(b c L) + margin`` with zero entries skipped."""
    N = valuation(f.delta, p) + margin
    for x in (f.b, f.c, f.L):
        if x:
            N += valuation(x, p)
    return N


def perturb(rng: random.Random, f: RationalCubic, p: int, N: int | None = None,
            height: int = 50) -> RationalCubic:
    """Cubic congruent to ``f`` coefficientwise mod ``p^N``, with ``N`` past the continuity radius."""
    N = perturbation_exponent(f, p) if N is None else N
    while True:
        shifts = [p**N * rng.randint(-height, height) for _ in range(3)]
        if not any(shifts):
            continue
        try:
            return RationalCubic(f.a + shifts[0], f.b + shifts[1], f.c + shifts[2])
        except (NotSeparable, RootAtZero):
            continue


# ---------------------------------------------------------- Moebius pairs

def mobius_pair(rng: random.Random, branch: str, height: int = 12) -> tuple[tuple, tuple]:
    """Root triples ``(alphas, betas)`` related by a Moebius map in the given branch."""
    while True:
        alphas = tuple({random_rational(rng, height) for _ in range(3)})
        if len(alphas) != 3:
            continue
        A = B = C = D = 0
        while A * D - B * C == 0:
            B, D = random_rational(rng, height, False), random_rational(rng, height, False)
            A = 0 if branch == XF_FORM else random_rational(rng, height)
            C = 0 if branch == QUADRATIC_TWIST else random_rational(rng, height)
        if branch == GENERAL and (A == 0 or C == 0):
            continue
        if any(A - C * a == 0 for a in alphas):
            continue
        betas = tuple((D * a - B) / (A - C * a) for a in alphas)
        if 0 in betas:
            continue
        return alphas, betas


__all__ = [
    "mobius_pair", "perturb", "perturbation_exponent", "random_cubic", "random_rational",
    "random_rational_cubic", "real_case_cubic", "rng_for", "split_cubic", "table2_cubic",
]

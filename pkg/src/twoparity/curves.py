"""Monic rational cubics and the curves E, E', Jac E', C attached to them.

For ``f = x^3 + a x^2 + b x + c`` with roots a1, a2, a3:

* ``E  : y^2 = f(x)``
* ``E' : y^2 = x f(x)``
* ``Jac E' : y^2 = (x + a2 a3)(x + a1 a3)(x + a1 a2) = x^3 + b x^2 + a c x + c^2``
* ``C  : y^2 = f(x^2)``, whose Jacobian is isogenous to ``E x Jac E'``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import flint

from .arith import prime_factors, to_q, valuation
from .errors import NotSeparable, RootAtZero
from .poly import UniPoly


def discriminant(a, b, c) -> Fraction:
    return 18 * a * b * c - 4 * a**3 * c + a * a * b * b - 4 * b**3 - 27 * c * c


@dataclass(frozen=True)
class RootData:
    """Factorization of a monic cubic over Q.

    ``linear`` holds the rational roots; ``quadratic`` holds ``(sigma, pi)``
    for each irreducible factor ``x^2 - sigma x + pi``; ``irreducible`` is set
    when the cubic has no rational root at all.
    """

    linear: tuple = ()
    quadratic: tuple = ()
    irreducible: bool = False

    @property
    def split(self) -> bool:
        return len(self.linear) == 3

    def factors(self) -> list[UniPoly]:
        out = [UniPoly((-r, 1)) for r in self.linear]
        out += [UniPoly((pi, -s, 1)) for s, pi in self.quadratic]
        return out


def _fmpq_to_fraction(q) -> Fraction:
    return Fraction(int(q.p), int(q.q))


def factor_cubic(a, b, c) -> RootData:
    poly = flint.fmpq_poly([flint.fmpq(x.numerator, x.denominator) for x in (c, b, a)] + [1])
    _, factors = poly.factor()
    linear, quadratic = [], []
    for fac, mult in factors:
        cs = [_fmpq_to_fraction(flint.fmpq(x)) for x in fac.coeffs()]
        lead = cs[-1]
        cs = [x / lead for x in cs]
        if len(cs) == 2:
            linear += [-cs[0]] * mult
        elif len(cs) == 3:
            quadratic += [(-cs[1], cs[0])] * mult
        else:
            return RootData(irreducible=True)
    return RootData(linear=tuple(sorted(linear)), quadratic=tuple(quadratic))


@dataclass(frozen=True)
class RationalCubic:
    """The monic cubic ``x^3 + a x^2 + b x + c`` with ``c != 0`` and nonzero discriminant."""

    a: Fraction
    b: Fraction
    c: Fraction
    _roots: RootData | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, to_q(getattr(self, name)))
        if self.c == 0:
            raise RootAtZero("f(0) = 0: E' would be singular")
        if self.delta == 0:
            raise NotSeparable("f has a repeated root")

    @classmethod
    def from_roots(cls, *roots) -> RationalCubic:
        r1, r2, r3 = (to_q(r) for r in roots)
        f = cls(-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -r1 * r2 * r3,
                RootData(linear=tuple(sorted((r1, r2, r3)))))
        return f

    @classmethod
    def from_linear_quadratic(cls, r, sigma, pi) -> RationalCubic:
        """``(x - r)(x^2 - sigma x + pi)``."""
        g = UniPoly((-to_q(r), 1)) * UniPoly((to_q(pi), -to_q(sigma), 1))
        return cls.from_poly(g)

    @classmethod
    def from_poly(cls, f: UniPoly) -> RationalCubic:
        if f.degree != 3 or f.lead != 1:
            raise ValueError(f"not a monic cubic: {f}")
        return cls(f.coeff(2), f.coeff(1), f.coeff(0))

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.a, self.b, self.c

    @cached_property
    def L(self) -> Fraction:
        return self.a * self.b - 9 * self.c

    @cached_property
    def delta(self) -> Fraction:
        return discriminant(self.a, self.b, self.c)

    @cached_property
    def poly(self) -> UniPoly:
        return UniPoly((self.c, self.b, self.a, 1))

    @cached_property
    def roots(self) -> RootData:
        if self._roots is not None:
            return self._roots
        return factor_cubic(self.a, self.b, self.c)

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coeffs)

    def __call__(self, x):
        return self.poly(x)

    def __str__(self):
        return str(self.poly)

    def literal(self) -> str:
        """Coefficient literal accepted by the command line."""
        return ",".join(str(x) for x in self.coeffs)


@dataclass(frozen=True)
class CurveFamily:
    E: UniPoly
    Eprime: UniPoly
    jacEprime: RationalCubic
    C: UniPoly


def build_family(f: RationalCubic) -> CurveFamily:
    """Defining polynomials of E, E', Jac E' and C.

    The Jac E' cubic has roots -a_i a_j; expanding the elementary symmetric
    functions gives ``x^3 + b x^2 + a c x + c^2`` with no need for the roots.
    """
    x = UniPoly.x()
    return CurveFamily(
        E=f.poly,
        Eprime=x * f.poly,
        jacEprime=RationalCubic(f.b, f.a * f.c, f.c * f.c),
        C=f.poly.compose(x * x),
    )


def invariants(f: RationalCubic) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """``(b, c, L, delta_f)`` with ``L = a b - 9 c``."""
    return f.b, f.c, f.L, f.delta


def L_from_roots(r1, r2, r3) -> Fraction:
    return 8 * r1 * r2 * r3 - (r1 + r2) * (r1 + r3) * (r2 + r3)


def scale(f: RationalCubic, d) -> RationalCubic:
    """``x^3 + d^2 a x^2 + d^4 b x + d^6 c``, the model obtained from x -> x/d^2."""
    d = to_q(d)
    roots = None
    if f._roots is not None:
        rd = f._roots
        roots = RootData(
            linear=tuple(sorted(r * d * d for r in rd.linear)),
            quadratic=tuple((s * d * d, pi * d**4) for s, pi in rd.quadratic),
            irreducible=rd.irreducible,
        )
    return RationalCubic(d**2 * f.a, d**4 * f.b, d**6 * f.c, roots)


def integralize(g: RationalCubic) -> tuple[RationalCubic, int]:
    """Smallest positive integer ``d`` making the scaled cubic integral."""
    d = 1
    for p in prime_factors(Fraction(g.a.denominator * g.b.denominator * g.c.denominator)):
        e = 0
        for coeff, weight in ((g.a, 2), (g.b, 4), (g.c, 6)):
            if coeff:
                v = valuation(coeff, p)
                if v < 0:
                    e = max(e, -(v // weight))  # ceil(-v / weight)
        d *= p**e
    if d == 1:
        return g, 1
    return scale(g, d), d


def gamma_shift(f: RationalCubic, gamma) -> RationalCubic:
    """The Jac-model cubic of ``y^2 = x f(x - gamma)``.

    Its roots are ``-(a_i + gamma)(a_j + gamma)``; the curve it defines has
    2-torsion isomorphic to that of ``y^2 = f(x)`` as a Galois module.
    """
    gamma = to_q(gamma)
    if f(-gamma) == 0:
        raise RootAtZero(f"f(-gamma) = 0 for gamma = {gamma}")
    shifted = RationalCubic.from_poly(f.poly.compose(UniPoly((-gamma, 1))))
    roots = None
    if f.roots.split:
        s = [r + gamma for r in f.roots.linear]
        roots = RootData(linear=tuple(sorted((-s[1] * s[2], -s[0] * s[2], -s[0] * s[1]))))
    fam = build_family(shifted).jacEprime
    return RationalCubic(fam.a, fam.b, fam.c, roots)

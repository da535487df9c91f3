"""Matching the 2-torsion of two cubics by a Moebius transformation.

Given ordered root triples ``alphas`` of ``g1`` and ``betas`` of ``g2``, the
map ``h(z) = (Dz - B)/(A - Cz)`` sends ``alpha_i`` to ``beta_i``.  Pulling
``y^2 = g2(x)`` back along ``h`` gives

    g2(h(x)) (A - Cx)^3 prod(A - C alpha_i) = (AD - BC)^3 g1(x)

so ``y^2 = g2(x)`` is a quadratic twist of ``y^2 = (1 - (C/A) x) g1(x)`` when
``A != 0`` and of ``y^2 = x g1(x)`` when ``A = 0``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .arith import square_class, to_q
from .curves import RationalCubic, gamma_shift
from .errors import BranchMismatch, NotSeparable, RootAtZero
from .poly import UniPoly

GENERAL = "General"
QUADRATIC_TWIST = "QuadraticTwist"
XF_FORM = "XfForm"
BRANCHES = (GENERAL, QUADRATIC_TWIST, XF_FORM)


def mobius_coefficients(alphas, betas) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    a1, a2, a3 = alphas
    b1, b2, b3 = betas
    A = a1 * a2 * (b1 - b2) + a3 * a1 * (b3 - b1) + a2 * a3 * (b2 - b3)
    B = a1 * a2 * b3 * (b2 - b1) + a3 * a1 * b2 * (b1 - b3) + a2 * a3 * b1 * (b3 - b2)
    C = b1 * (a2 - a3) + b2 * (a3 - a1) + b3 * (a1 - a2)
    D = b1 * b2 * (a1 - a2) + b2 * b3 * (a2 - a3) + b3 * b1 * (a3 - a1)
    return A, B, C, D


@dataclass(frozen=True)
class MobiusMatch:
    alphas: tuple
    betas: tuple
    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction

    @property
    def branch(self) -> str:
        if self.A == 0:
            return XF_FORM
        return QUADRATIC_TWIST if self.C == 0 else GENERAL

    @property
    def det(self) -> Fraction:
        return self.A * self.D - self.B * self.C

    def h(self, z):
        """Image of ``z``; ``None`` at the pole ``z = A/C``."""
        z = to_q(z)
        den = self.A - self.C * z
        if den == 0:
            return None
        return (self.D * z - self.B) / den

    def matrix(self) -> tuple:
        """``((D, -B), (-C, A))``, acting by ``z -> (m00 z + m01)/(m10 z + m11)``."""
        return ((self.D, -self.B), (-self.C, self.A))

    def g1(self) -> UniPoly:
        return UniPoly.from_roots(self.alphas)

    def g2(self) -> UniPoly:
        return UniPoly.from_roots(self.betas)

    def to_json(self):
        return {
            "alphas": [str(a) for a in self.alphas],
            "betas": [str(b) for b in self.betas],
            "A": str(self.A), "B": str(self.B), "C": str(self.C), "D": str(self.D),
            "branch": self.branch,
        }


def _check_triple(t, name):
    t = tuple(to_q(x) for x in t)
    if len(t) != 3:
        raise ValueError(f"{name} must have three entries")
    if len(set(t)) != 3:
        raise NotSeparable(f"{name} has a repeated root")
    return t


def mobius_match(alphas, betas) -> MobiusMatch:
    alphas = _check_triple(alphas, "alphas")
    betas = _check_triple(betas, "betas")
    m = MobiusMatch(alphas, betas, *mobius_coefficients(alphas, betas))
    if m.det == 0:
        raise ArithmeticError("degenerate Moebius coefficients")
    for a, b in zip(alphas, betas):
        if m.h(a) != b:
            raise ArithmeticError(f"h({a}) = {m.h(a)} but expected {b}")
    return m


def model_identity(m: MobiusMatch) -> bool:
    """``prod(Dx - B - beta_i (A - Cx)) * prod(A - C alpha_i) == (AD - BC)^3 g1(x)``.

    The left product is ``g2(h(x)) (A - Cx)^3`` with the denominators cleared.
    """
    x = UniPoly.x()
    lhs = UniPoly.const(1)
    for beta in m.betas:
        lhs = lhs * (m.D * x - m.B - beta * (m.A - m.C * x))
    scale = Fraction(1)
    for alpha in m.alphas:
        scale *= m.A - m.C * alpha
    return lhs * UniPoly.const(scale) == UniPoly.const(m.det ** 3) * m.g1()


def compose(outer: MobiusMatch, inner: MobiusMatch) -> tuple:
    """Matrix of ``outer.h o inner.h``."""
    (p, q), (r, s) = outer.matrix()
    (t, u), (v, w) = inner.matrix()
    return ((p * t + q * v, p * u + q * w), (r * t + s * v, r * u + s * w))


def is_identity_map(mat) -> bool:
    (p, q), (r, s) = mat
    return q == 0 and r == 0 and p == s != 0


@dataclass(frozen=True)
class NormalForm:
    """``y^2 = g2(x)`` is isomorphic to ``d y^2 = model(x)``.

    ``d`` is reduced to its squarefree class.  For the general branch
    ``monic`` is the monic cubic ``f`` and ``scale`` the factor with
    ``x' g1((A/C)(1 - x')) = scale * x' f(x')`` in ``x' = 1 - (C/A) x``.
    """

    branch: str
    d: int
    model: UniPoly
    monic: UniPoly | None = None
    scale: Fraction | None = None

    def to_json(self):
        out = {"branch": self.branch, "d": self.d, "model": str(self.model)}
        if self.monic is not None:
            out["substitution"] = "x' = 1 - (C/A) x"
            out["monic"] = str(self.monic)
            out["scale"] = str(self.scale)
        return out


def normal_form(m: MobiusMatch, g1: UniPoly | None = None, branch: str | None = None) -> NormalForm:
    if g1 is not None and g1 != m.g1():
        raise BranchMismatch("g1 does not have the matched roots")
    if branch is not None and branch != m.branch:
        raise BranchMismatch(f"requested {branch}, match is {m.branch}")
    x = UniPoly.x()
    g1 = m.g1()
    if m.branch == XF_FORM:
        prod = m.alphas[0] * m.alphas[1] * m.alphas[2]
        return NormalForm(XF_FORM, square_class(-m.C * prod / m.B), x * g1)
    prod = Fraction(1)
    for alpha in m.alphas:
        prod *= m.A - m.C * alpha
    d = square_class(m.A * prod / m.det)
    if m.branch == QUADRATIC_TWIST:
        return NormalForm(QUADRATIC_TWIST, d, g1)
    linear = UniPoly((Fraction(1), -m.C / m.A))
    # g1 in the variable x' = 1 - (C/A) x
    pulled = g1.compose(UniPoly((m.A / m.C, -m.A / m.C)))
    scale = pulled.lead
    return NormalForm(GENERAL, d, linear * g1, monic=pulled.monic(), scale=scale)


def twisted_model_identity(m: MobiusMatch, nf: NormalForm) -> bool:
    """Exact check that ``g2(h(x))`` times a square equals ``d * model`` times a square.

    Clears denominators as ``prod(Dx - B - beta_i(A - Cx)) * q(x)`` where
    ``q = A - Cx`` (just ``-Cx`` when ``A = 0``) and compares against ``k * model`` for a
    constant ``k`` in the square class of ``d``.
    """
    x = UniPoly.x()
    den = m.A - m.C * x
    lhs = UniPoly.const(1)
    for beta in m.betas:
        lhs = lhs * (m.D * x - m.B - beta * den)
    lhs = lhs * den
    if lhs.degree != nf.model.degree:
        return False
    k = lhs.lead / nf.model.lead
    return lhs == UniPoly.const(k) * nf.model and square_class(k) == nf.d


def gamma_pair(f: RationalCubic, gamma) -> tuple[tuple, tuple]:
    """Ordered root triples of ``f`` and its gamma-shifted partner."""
    if not f.roots.split:
        raise ValueError("gamma pairing needs three rational roots")
    gamma = to_q(gamma)
    alphas = tuple(f.roots.linear)
    s = [a + gamma for a in alphas]
    betas = (-s[1] * s[2], -s[0] * s[2], -s[0] * s[1])
    return alphas, betas


def pair_generator(f: RationalCubic, seed: int, height: int = 20) -> Iterator[tuple]:
    """Endless ``(f, g, alphas, betas)`` with ``g = gamma_shift(f, gamma)`` for random gamma."""
    rng = random.Random(f"pairs/{seed}")
    yield from _gamma_stream(f, rng, height, first=Fraction(0))


def _gamma_stream(f, rng, height, first=None):
    gamma = first
    while True:
        if gamma is None:
            gamma = Fraction(rng.randint(-height, height), rng.randint(1, height))
        try:
            g = gamma_shift(f, gamma)
            alphas, betas = gamma_pair(f, gamma)
            if len(set(betas)) == 3 and 0 not in betas:
                yield f, g, alphas, betas
        except (RootAtZero, NotSeparable):
            pass
        gamma = None


__all__ = [
    "BRANCHES", "GENERAL", "MobiusMatch", "NormalForm", "QUADRATIC_TWIST", "XF_FORM",
    "compose", "gamma_pair", "is_identity_map", "mobius_coefficients", "mobius_match",
    "model_identity", "normal_form", "pair_generator", "twisted_model_identity",
]

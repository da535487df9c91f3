"""Dense univariate polynomials over Q with exact long division."""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest

from .arith import to_q
from .errors import DivisionByZeroPoly


class UniPoly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of x**i.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [to_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> UniPoly:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots) -> UniPoly:
        out = cls((1,))
        for r in roots:
            out = out * cls((-to_q(r), 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        x = to_q(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _lift(self, other):
        return other if isinstance(other, UniPoly) else UniPoly((other,))

    def __add__(self, other):
        other = self._lift(other)
        return UniPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UniPoly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        return poly_divmod(self, self._lift(other))

    def __mod__(self, other):
        return poly_divmod(self, self._lift(other))[1]

    def __floordiv__(self, other):
        return poly_divmod(self, self._lift(other))[0]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> UniPoly:
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, inner: UniPoly) -> UniPoly:
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def monic(self) -> UniPoly:
        if self.is_zero():
            raise DivisionByZeroPoly("zero polynomial has no monic normalization")
        return UniPoly(c / self.lead for c in self.coeffs)

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                coef = "" if mag == 1 else (f"{mag}*" if mag.denominator == 1 else f"({mag})*")
                body = coef + ("x" if i == 1 else f"x^{i}")
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def poly_divmod(num: UniPoly, den: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Exact long division: ``num == q*den + r`` with ``deg r < deg den``."""
    if den.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    rem = list(num.coeffs)
    dd = den.degree
    lead = den.lead
    quot = [Fraction(0)] * max(len(rem) - dd, 1)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] / lead
        if c:
            quot[k - dd] = c
            for j, d in enumerate(den.coeffs):
                rem[k - dd + j] -= c * d
    return UniPoly(quot), UniPoly(rem[:dd] if dd > 0 else [])

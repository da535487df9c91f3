"""Exact arithmetic over Q and its completions.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  Places of Q are :class:`Place` values; Hilbert
symbols are evaluated with the classical closed forms at every place.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import flint

from .errors import NotAUnit, NotPrime, ValuationOfZero, ZeroArgument

REAL = "real"
COMPLEX = "complex"
PADIC = "padic"


def to_q(x) -> Fraction:
    """Coerce an int, Fraction or rational literal string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)) or isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    return n > 1 and bool(flint.fmpz(n).is_prime())


@lru_cache(maxsize=65536)
def _factor_int(n: int) -> tuple:
    return tuple((int(p), int(e)) for p, e in flint.fmpz(n).factor())


def prime_factors(x) -> list[int]:
    """Sorted primes dividing the numerator or the denominator of ``x``.

    Zero has no prime support and yields an empty list.
    """
    x = to_q(x)
    if x == 0:
        return []
    primes = set()
    for n in (abs(x.numerator), x.denominator):
        if n > 1:
            primes.update(p for p, _ in _factor_int(n))
    return sorted(primes)


@dataclass(frozen=True)
class Place:
    """A place of Q: the real place, a complex completion, or Q_p."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == PADIC:
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise NotPrime(f"{self.p!r} is not a prime")
        elif self.kind in (REAL, COMPLEX):
            if self.p is not None:
                raise ValueError("archimedean places carry no prime")
        else:
            raise ValueError(f"unknown place kind {self.kind!r}")

    @classmethod
    def real(cls) -> Place:
        return cls(REAL)

    @classmethod
    def complex(cls) -> Place:
        return cls(COMPLEX)

    @classmethod
    def padic(cls, p: int) -> Place:
        return cls(PADIC, int(p))

    @classmethod
    def parse(cls, text: str) -> Place:
        t = text.strip().lower()
        if t in ("real", "r", "inf", "infinity"):
            return cls.real()
        if t in ("complex", "c"):
            return cls.complex()
        if t.startswith("q"):
            t = t.lstrip("q_")
        try:
            return cls.padic(int(t))
        except ValueError:
            raise NotPrime(f"cannot read a place from {text!r}") from None

    @property
    def is_archimedean(self) -> bool:
        return self.kind != PADIC

    @property
    def is_odd_padic(self) -> bool:
        return self.kind == PADIC and self.p != 2

    def sort_key(self):
        return (0, 0) if self.kind == REAL else (1, 0) if self.kind == COMPLEX else (2, self.p)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def to_json(self):
        return self.kind if self.kind != PADIC else {"p": self.p}

    def __str__(self):
        if self.kind == REAL:
            return "Real"
        if self.kind == COMPLEX:
            return "Complex"
        return f"Padic({self.p})"

    __repr__ = __str__


REAL_PLACE = Place.real()
COMPLEX_PLACE = Place.complex()


def valuation(x, p: int) -> int:
    """The p-adic valuation of a nonzero rational."""
    x = to_q(x)
    if x == 0:
        raise ValuationOfZero("valuation of zero is undefined")
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def unit_part(x, p: int) -> Fraction:
    """``x / p**v_p(x)``, a p-adic unit."""
    x = to_q(x)
    v = valuation(x, p)
    return x / Fraction(p) ** v


def valuation_or_inf(x, p: int):
    x = to_q(x)
    return float("inf") if x == 0 else valuation(x, p)


def residue(u, m: int) -> int:
    """Image of a rational whose denominator is prime to ``m`` in Z/m."""
    u = to_q(u)
    return (u.numerator * pow(u.denominator, -1, m)) % m


def legendre(u, p: int) -> int:
    """Quadratic residue symbol of a p-adic unit ``u`` for odd ``p``."""
    u = to_q(u)
    if u == 0 or valuation(u, p) != 0:
        raise NotAUnit(f"{u} is not a {p}-adic unit")
    r = residue(u, p)
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def is_square(x, place: Place) -> bool:
    x = to_q(x)
    if x == 0:
        raise ZeroArgument("zero has no square class")
    if place.kind == REAL:
        return x > 0
    if place.kind == COMPLEX:
        return True
    p = place.p
    if valuation(x, p) % 2:
        return False
    u = unit_part(x, p)
    if p == 2:
        return residue(u, 8) == 1
    return legendre(u, p) == 1


def _eps(u8: int) -> int:
    return ((u8 - 1) // 2) % 2


def _omega(u8: int) -> int:
    return ((u8 * u8 - 1) // 8) % 2


def hilbert(a, b, place: Place) -> int:
    """The quadratic Hilbert symbol (a, b) at ``place``, valued in {+1, -1}."""
    a, b = to_q(a), to_q(b)
    if a == 0 or b == 0:
        raise ZeroArgument("Hilbert symbol needs nonzero arguments")
    if place.kind == REAL:
        return -1 if a < 0 and b < 0 else 1
    if place.kind == COMPLEX:
        return 1
    p = place.p
    alpha, beta = valuation(a, p), valuation(b, p)
    u, w = a / Fraction(p) ** alpha, b / Fraction(p) ** beta
    if p == 2:
        u8, w8 = residue(u, 8), residue(w, 8)
        e = _eps(u8) * _eps(w8) + alpha * _omega(w8) + beta * _omega(u8)
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        sign *= legendre(u, p)
    if alpha % 2:
        sign *= legendre(w, p)
    return sign


def hilbert_places(*values) -> list[Place]:
    """Real, Q_2 and every Q_p with p in the support of one of ``values``."""
    primes = {2}
    for x in values:
        primes.update(prime_factors(x))
    return [REAL_PLACE] + [Place.padic(p) for p in sorted(primes)]


def product_formula_check(a, b) -> set[Place]:
    """Places where (a, b) = -1.  By Hilbert reciprocity the set has even size."""
    a, b = to_q(a), to_q(b)
    if a == 0 or b == 0:
        raise ZeroArgument("Hilbert symbol needs nonzero arguments")
    return {v for v in hilbert_places(a, b) if hilbert(a, b, v) == -1}


def square_class(x) -> int:
    """Signed squarefree integer in the square class of a nonzero rational."""
    x = to_q(x)
    if x == 0:
        raise ZeroArgument("zero has no square class")
    n = x.numerator * x.denominator
    out = -1 if n < 0 else 1
    for p, e in _factor_int(abs(n)) if abs(n) > 1 else ():
        if e % 2:
            out *= p
    return out

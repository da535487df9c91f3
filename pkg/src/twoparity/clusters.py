"""Cluster pictures of ``E' : y^2 = x f(x)`` at odd primes and real root layouts.

Only the two shapes that admit a local formula are classified: all roots of
``x f(x)`` distinct mod p, or exactly one twin (a cluster of two roots).  The
twin is either ``{0, a1}`` (a root of ``f`` close to zero) or a pair of roots
of ``f`` close to each other.  Everything else is reported as unsupported.

Twin signs are read off from the squareness of explicit rational quantities
rather than from a Frobenius action on a chosen square root.  When the roots
forming the twin are not rational, the same squareness tests are decided on
residues mod p, which is legitimate because every quantity tested is a unit.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .arith import Place, is_square, legendre, residue, valuation, valuation_or_inf
from .curves import RationalCubic, integralize
from .errors import EvenPrimeUnsupported, FilterInapplicable, NotIntegral, Unsupported
from .sturm import real_root_counts

ALL_DISTINCT = "AllDistinct"
ONE_TWIN = "OneTwin"
UNSUPPORTED = "Unsupported"

ZERO_AND_ROOT = "ZeroAndRoot"
ROOT_PAIR = "RootPair"


@dataclass(frozen=True)
class Twin:
    """A two-root cluster.

    For ``ZeroAndRoot`` the twin is ``{0, alpha}`` and ``n = v(alpha)``; for
    ``RootPair`` it is a pair of roots of ``f`` with sum ``sigma`` and product
    ``pi`` and ``n = v(sigma^2 - 4 pi) = 2 v(difference)``.  Root data that is
    not rational is left as ``None`` and the twin is described by residues.
    """

    kind: str
    n: int
    alpha: Fraction | None = None
    sigma: Fraction | None = None
    pi: Fraction | None = None
    third: Fraction | None = None
    residues: tuple = ()
    sign_E: int | None = None
    sign_Eprime: int | None = None

    @property
    def depth(self) -> Fraction:
        return Fraction(self.n) if self.kind == ZERO_AND_ROOT else Fraction(self.n, 2)

    def members(self) -> str:
        if self.kind == ZERO_AND_ROOT:
            return "{0, %s}" % (self.alpha if self.alpha is not None else "root")
        if self.sigma is not None:
            return "roots of x^2 - (%s)x + (%s)" % (self.sigma, self.pi)
        return "roots congruent to %d" % self.residues[0]


@dataclass(frozen=True)
class ClusterPicture:
    p: int
    shape: str
    top_depth: Fraction = Fraction(0)
    twins: tuple = ()
    reason: str | None = None

    @property
    def twin(self) -> Twin | None:
        return self.twins[0] if self.twins else None

    @property
    def supported(self) -> bool:
        return self.shape != UNSUPPORTED


@dataclass(frozen=True)
class RealConfiguration:
    case_id: int
    real_roots_of_f: int
    positive_roots_of_f: int


def real_configuration(f: RationalCubic) -> RealConfiguration:
    """Table 1 case of ``f`` from exact root counts.

    Cases 1-4 have three real roots of which 3, 2, 1, 0 are positive.  With one
    real root, case 5 has it positive (``c < 0``) and case 6 negative.
    """
    total, positive = real_root_counts(f.poly)
    if total == 3:
        case = 4 - positive
    else:
        case = 5 if positive else 6
    return RealConfiguration(case, total, positive)


def _double_root_mod_p(f: RationalCubic, p: int):
    """Residues ``(r, s)`` with ``f = (x - r)^2 (x - s)`` mod p, or None for a triple root."""
    a, b, c = (residue(x, p) for x in f.coeffs)
    f_bar = [c, b, a, 1]
    df_bar = [b, (2 * a) % p, 3 % p]
    g = _gcd_mod_p(f_bar, df_bar, p)
    if len(g) != 2:
        return None
    r = (-g[0] * pow(g[1], -1, p)) % p
    s = (-a - 2 * r) % p
    return r, s


def _trim(u):
    while u and u[-1] == 0:
        u.pop()
    return u


def _gcd_mod_p(u, w, p):
    u, w = _trim([x % p for x in u]), _trim([x % p for x in w])
    while w:
        u = _polymod(u, w, p)
        u, w = w, u
    return u


def _polymod(u, w, p):
    u = list(u)
    inv = pow(w[-1], -1, p)
    while len(u) >= len(w):
        k = u[-1] * inv % p
        shift = len(u) - len(w)
        for i, x in enumerate(w):
            u[shift + i] = (u[shift + i] - k * x) % p
        _trim(u)
    return u


def _explicit_zero_twin(f: RationalCubic, p: int):
    for r in f.roots.linear:
        if valuation(r, p) > 0:
            return r
    return None


def _explicit_pair(f: RationalCubic, p: int):
    """``(sigma, pi, third)`` for a twin of rational data, else None."""
    rd = f.roots
    if rd.split:
        r = rd.linear
        for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
            if valuation_or_inf(r[i] - r[j], p) > 0:
                return r[i] + r[j], r[i] * r[j], r[k]
    elif rd.quadratic and rd.linear:
        (sigma, pi), third = rd.quadratic[0], rd.linear[0]
        if valuation(sigma * sigma - 4 * pi, p) > 0:
            return sigma, pi, third
    return None


def cluster_picture(f: RationalCubic, p: int, use_roots: bool = True) -> ClusterPicture:
    """Cluster picture of ``x f(x)`` at the odd prime ``p`` for integral ``f``.

    With ``use_roots`` false the rational factorization is ignored and twin
    signs are decided from residues alone.
    """
    if p == 2:
        raise EvenPrimeUnsupported("cluster pictures need an odd residue characteristic")
    if not f.is_integral:
        raise NotIntegral("integralize the cubic before building its cluster picture")
    vc, vd = valuation(f.c, p), valuation(f.delta, p)
    if vc == 0 and vd == 0:
        return ClusterPicture(p, ALL_DISTINCT)
    if vc > 0 and vd > 0:
        reason = "0 and two roots of f coincide mod p" if f.b % p == 0 else "two twins"
        return ClusterPicture(p, UNSUPPORTED, reason=reason)
    if vc > 0:
        twin = Twin(ZERO_AND_ROOT, n=vc, alpha=_explicit_zero_twin(f, p) if use_roots else None, residues=(0,))
    else:
        rs = _double_root_mod_p(f, p)
        if rs is None:
            return ClusterPicture(p, UNSUPPORTED, reason="three roots of f coincide mod p")
        pair = _explicit_pair(f, p) if use_roots else None
        sigma, pi, third = pair if pair else (None, None, None)
        twin = Twin(ROOT_PAIR, n=vd, sigma=sigma, pi=pi, third=third, residues=rs)
    sE, sEp = twin_signs(twin, f, p)
    twin = replace(twin, sign_E=sE, sign_Eprime=sEp)
    return ClusterPicture(p, ONE_TWIN, twins=(twin,))


def twin_signs(twin: Twin, f: RationalCubic, p: int) -> tuple[int | None, int]:
    """``(sign_E, sign_Eprime)``; ``sign_E`` is None for a ``{0, alpha}`` twin.

    ``{0, a1}``: + iff ``a2 a3 = -c / a1`` is a square (``a2 a3 = b`` mod p).
    Pair ``{a2, a3}``: ``sign_E`` is + iff ``(a2+a3)/2 - a1`` is a square and
    ``sign_Eprime`` is + iff ``(a2+a3)/2 * ((a2+a3)/2 - a1)`` is a square.
    """
    place = Place.padic(p)

    def sq(x) -> int:
        return 1 if is_square(x, place) else -1

    if twin.kind == ZERO_AND_ROOT:
        if twin.alpha is not None:
            return None, sq(-f.c / twin.alpha)
        return None, legendre(f.b, p)
    if twin.kind != ROOT_PAIR:
        raise Unsupported(f"unknown twin kind {twin.kind!r}")
    if twin.sigma is not None:
        half = twin.sigma / 2
        return sq(half - twin.third), sq(half * (half - twin.third))
    r, s = twin.residues
    return legendre(r - s, p), legendre(r * (r - s), p)


# Table 2 row keys
TYPE_2 = "2"
ONE_N_PLUS = "1n+"
ONE_N_MINUS = "1n-"
I_PP = "I++"
I_A = "I+a"
I_B = "I+b"
I_MM = "I--"
ROWS = (TYPE_2, ONE_N_PLUS, ONE_N_MINUS, I_PP, I_A, I_B, I_MM)

_I_ROWS = {(1, 1): I_PP, (1, -1): I_A, (-1, 1): I_B, (-1, -1): I_MM}


@dataclass(frozen=True)
class ReductionType:
    row: str
    n: int = 0
    sign_E: int | None = None
    sign_Eprime: int | None = None
    picture: ClusterPicture | None = field(default=None, compare=False)

    @property
    def label(self) -> str:
        n = self.n
        return {
            TYPE_2: "2",
            ONE_N_PLUS: f"1_{n}^+",
            ONE_N_MINUS: f"1_{n}^-",
            I_PP: f"I_{{{n},{n}}}^{{+,+}}",
            I_A: f"I_{{{n}~{n}}}^+(a)",
            I_B: f"I_{{{n}~{n}}}^+(b)",
            I_MM: f"I_{{{n},{n}}}^{{-,-}}",
        }[self.row]


def reduction_type(f: RationalCubic, p: int) -> ReductionType:
    """Table 2 row of ``f`` at the odd prime ``p`` (integralizing first).

    Raises :class:`Unsupported` when the cluster picture has another shape.
    """
    g, _ = integralize(f)
    pic = cluster_picture(g, p)
    if pic.shape == ALL_DISTINCT:
        return ReductionType(TYPE_2, picture=pic)
    if pic.shape == UNSUPPORTED:
        raise Unsupported(pic.reason)
    t = pic.twin
    if t.kind == ZERO_AND_ROOT:
        row = ONE_N_PLUS if t.sign_Eprime == 1 else ONE_N_MINUS
        return ReductionType(row, t.n, None, t.sign_Eprime, pic)
    return ReductionType(_I_ROWS[(t.sign_E, t.sign_Eprime)], t.n, t.sign_E, t.sign_Eprime, pic)


def semistable_filter(f: RationalCubic, p: int) -> bool:
    """Sufficient condition for ``x f(x)`` to have at worst one double root mod p."""
    if p in (2, 3):
        raise FilterInapplicable("the filter needs p not dividing 6")
    if not f.is_integral:
        raise FilterInapplicable("the filter needs integral coefficients")
    a, b, c = (int(x) for x in f.coeffs)
    quantities = (a * a - 3 * b, b, a * a - 4 * b, a * b - 9 * c, c)
    if any(q == 0 for q in quantities):
        raise FilterInapplicable("a^2-3b, b, a^2-4b, ab-9c and c must be nonzero")
    if (a * a - 3 * b) % p == 0 and (9 * c - a * b) % p == 0:
        return False
    if (b * (a * a - 4 * b)) % p == 0 and c % p == 0:
        return False
    return True


_REAL_LAYOUTS = {
    1: "* o o o",
    2: "o * o o",
    3: "o o * o",
    4: "o o o *",
    5: "* o",
    6: "o *",
}


def render_real(config: RealConfiguration) -> str:
    """Real roots of ``x f(x)`` from smallest to largest: ``*`` is 0, ``o`` a root of f."""
    return " < ".join(_REAL_LAYOUTS[config.case_id].split())


def _depth_text(d: Fraction) -> str:
    return str(d.numerator) if d.denominator == 1 else f"{d.numerator}/{d.denominator}"


def render_cluster(pic: ClusterPicture) -> str:
    """ASCII cluster picture of ``x f(x)``: ``*`` is the root 0, ``o`` a root of f.

    Twins are bracketed with their relative depth; the outer subscript is the
    depth of the whole root set.
    """
    top = "_" + _depth_text(pic.top_depth)
    if pic.shape == ALL_DISTINCT:
        return f"(* o o o){top}"
    if pic.shape == UNSUPPORTED:
        raise Unsupported(pic.reason)
    t = pic.twin
    sub = "_" + _depth_text(t.depth)
    if t.kind == ZERO_AND_ROOT:
        return f"((* o){sub} o o){top}"
    return f"(* o (o o){sub}){top}"

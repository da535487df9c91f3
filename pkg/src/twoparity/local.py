"""Both sides of the local identity ``w_E * w_JacE' = lambda * H`` at one place.

``H`` is a product of Hilbert symbols in ``b, c, L = ab - 9c`` and the
discriminant.  ``lambda`` is the deficiency of ``C : y^2 = f(x^2)`` times
``(-1)^(dim ker - dim coker)`` of the isogeny ``E x Jac E' -> Jac C`` on local
points, which reduces to component counts over R and Tamagawa numbers at odd
primes.  At Q_2 only ``H`` is computed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import COMPLEX, PADIC, REAL, Place, hilbert
from .clusters import (
    I_A, I_B, I_MM, I_PP, ONE_N_MINUS, ONE_N_PLUS, TYPE_2,
    ReductionType, real_configuration, reduction_type,
)
from .curves import RationalCubic
from .errors import CannotInfer, Unsupported, UnsupportedPlace


def error_term_H(f: RationalCubic, place: Place) -> int:
    b, c, L, disc = f.b, f.c, f.L, f.delta
    if b != 0 and L != 0:
        return hilbert(b, -c, place) * hilbert(-2 * L, disc, place) * hilbert(L, -b, place)
    return hilbert(-c, -1, place) * hilbert(2 * c, disc, place)


def _log2(ratio: Fraction) -> int:
    """Exact base-2 logarithm; anything but a power of two is a bookkeeping bug."""
    num, den = ratio.numerator, ratio.denominator
    for x in (num, den):
        if x <= 0 or x & (x - 1):
            raise ArithmeticError(f"component ratio {ratio} is not a power of 2")
    return num.bit_length() - den.bit_length()


# Table 1: case -> (n_E, n_JacE', n_JacC, identity-component kernel points, mu, lambda, H)
TABLE_1 = {
    1: (2, 2, 4, 2, 1, -1, -1),
    2: (2, 2, 2, 1, 1, -1, -1),
    3: (2, 2, 1, 1, 1, 1, 1),
    4: (2, 2, 1, 1, 1, 1, 1),
    5: (1, 1, 1, 2, 1, -1, -1),
    6: (1, 1, 1, 2, 1, -1, -1),
}


@dataclass(frozen=True)
class RealPayload:
    case: int
    n_E: int
    n_JacEprime: int
    n_JacC: int
    kernel_identity_count: int
    mu: int

    def to_json(self):
        return {
            "case": self.case, "n_E": self.n_E, "n_JacEprime": self.n_JacEprime,
            "n_JacC": self.n_JacC, "kernel_identity_count": self.kernel_identity_count,
            "mu": self.mu,
        }


def lambda_real(f: RationalCubic) -> tuple[int, RealPayload]:
    config = real_configuration(f)
    n_E = n_J = 2 if config.real_roots_of_f == 3 else 1
    n_C = max(1, config.positive_roots_of_f)
    n_JC = 2 ** (n_C - 1)
    # (a_3, 0) is on the identity component of E; the kernel point paired with
    # -a_1 a_2 is there too iff -a_1 a_2 is the largest real element of
    # {-a_i a_j}: both smaller roots positive, or a_1, a_2 complex conjugate.
    kernel = TABLE_1[config.case_id][3]
    mu = 1  # C(R) is never empty for a monic even-degree model
    lam = mu * (-1) ** _log2(Fraction(kernel * n_E * n_J, n_JC))
    payload = RealPayload(config.case_id, n_E, n_J, n_JC, kernel, mu)
    return lam, payload


def _tilde(n: int) -> int:
    return 2 if n % 2 == 0 else 1


def table2_row(row: str, n: int) -> dict:
    """Tamagawa numbers, deficiency and the lambda, w*w, H columns of one Table 2 row."""
    t = _tilde(n)
    odd = -1 if n % 2 else 1
    return {
        TYPE_2: dict(c=(1, 1, 1), mu=1, lam=1, ww=1, H=1),
        ONE_N_PLUS: dict(c=(1, 2 * n, n), mu=1, lam=-1, ww=-1, H=1),
        ONE_N_MINUS: dict(c=(1, 2, t), mu=1, lam=odd, ww=1, H=odd),
        I_PP: dict(c=(n, n, n * n), mu=1, lam=1, ww=1, H=1),
        I_A: dict(c=(n, t, n), mu=1, lam=-odd, ww=-1, H=odd),
        I_B: dict(c=(t, n, n), mu=1, lam=-odd, ww=-1, H=odd),
        I_MM: dict(c=(t, t, t * t), mu=1, lam=1, ww=1, H=1),
    }[row]


@dataclass(frozen=True)
class PadicPayload:
    type: ReductionType
    c_E: int
    c_JacEprime: int
    c_JacC: int
    mu: int

    def to_json(self):
        t = self.type
        out = {"type": t.label, "row": t.row, "n": t.n,
               "c_E": self.c_E, "c_JacEprime": self.c_JacEprime, "c_JacC": self.c_JacC,
               "mu": self.mu}
        pic = t.picture
        if pic is not None and pic.twin is not None:
            tw = pic.twin
            out["twin"] = {"kind": tw.kind, "members": tw.members(),
                           "depth": str(tw.depth), "sign_E": tw.sign_E,
                           "sign_Eprime": tw.sign_Eprime}
        return out


def lambda_padic(f: RationalCubic, p: int) -> tuple[int, PadicPayload]:
    if p == 2:
        raise UnsupportedPlace("lambda at 2 needs Neron exterior forms")
    try:
        rtype = reduction_type(f, p)
    except Unsupported as exc:
        raise UnsupportedPlace(exc.reason) from None
    row = table2_row(rtype.row, rtype.n)
    c_E, c_J, c_C = row["c"]
    lam = row["mu"] * (-1) ** _log2(Fraction(c_E * c_J, c_C))
    if lam != row["lam"]:
        raise AssertionError(f"Table 2 row {rtype.label}: ratio gives {lam}, column {row['lam']}")
    return lam, PadicPayload(rtype, c_E, c_J, c_C, row["mu"])


def root_numbers(f: RationalCubic, place: Place) -> tuple[int, int]:
    """Local root numbers ``(w_E, w_JacE')``.

    Archimedean places give -1 for each curve.  At odd p both curves are
    semistable in the supported shapes and ``w = -1`` exactly for split
    multiplicative reduction, i.e. a twin of sign +.
    """
    if place.kind in (REAL, COMPLEX):
        return -1, -1
    if place.p == 2:
        raise UnsupportedPlace("root numbers at 2 are not computed")
    try:
        rtype = reduction_type(f, place.p)
    except Unsupported as exc:
        raise UnsupportedPlace(exc.reason) from None
    return _root_numbers_from_type(rtype)


def _root_numbers_from_type(rtype: ReductionType) -> tuple[int, int]:
    w_E = -1 if rtype.sign_E == 1 else 1
    w_J = -1 if rtype.sign_Eprime == 1 else 1
    return w_E, w_J


@dataclass(frozen=True)
class LocalParityReport:
    place: Place
    H: int
    supported: bool = True
    reason: str | None = None
    payload: object = None
    w_E: int | None = None
    w_JacEprime: int | None = None
    lam: int | None = None
    identity_holds: bool | None = field(default=None)

    @property
    def ww(self) -> int | None:
        return None if self.w_E is None else self.w_E * self.w_JacEprime

    def to_json(self):
        if self.payload is None:
            payload = {}
        elif hasattr(self.payload, "to_json"):
            payload = self.payload.to_json()
        else:
            payload = dict(self.payload)
        return {
            "place": self.place.to_json(),
            "support": "supported" if self.supported else {"unsupported": self.reason},
            "w_E": self.w_E,
            "w_JacEprime": self.w_JacEprime,
            "lambda": self.lam,
            "H": self.H,
            "identity": self.identity_holds,
            "payload": payload,
        }


def local_report(f: RationalCubic, place: Place) -> LocalParityReport:
    H = error_term_H(f, place)
    if place.kind == COMPLEX:
        # kernel/cokernel ratio is 4 over C
        return LocalParityReport(place, H, payload={}, w_E=-1, w_JacEprime=-1, lam=1,
                                 identity_holds=(1 == 1 * H))
    if place.kind == REAL:
        lam, payload = lambda_real(f)
        w_E, w_J = root_numbers(f, place)
    else:
        try:
            lam, payload = lambda_padic(f, place.p)
        except UnsupportedPlace as exc:
            return LocalParityReport(place, H, supported=False, reason=exc.reason)
        w_E, w_J = _root_numbers_from_type(payload.type)
    return LocalParityReport(place, H, payload=payload, w_E=w_E, w_JacEprime=w_J, lam=lam,
                             identity_holds=(w_E * w_J == lam * H))


@dataclass(frozen=True)
class InferredLambda:
    """A lambda value obtained by assuming the local identity; never a computed one."""

    value: int
    place: Place
    provenance: str = "inferred"


def infer_lambda(f: RationalCubic, place: Place, ww: int | None = None) -> InferredLambda:
    """``w_E w_JacE' * H`` at ``place``, with ``w_E w_JacE'`` supplied or computable."""
    if ww is None:
        try:
            w_E, w_J = root_numbers(f, place)
        except UnsupportedPlace as exc:
            raise CannotInfer(f"{place}: root numbers unavailable ({exc})") from None
        ww = w_E * w_J
    if ww not in (1, -1):
        raise ValueError("root number product must be +1 or -1")
    return InferredLambda(ww * error_term_H(f, place), place)


__all__ = [
    "PADIC", "InferredLambda", "LocalParityReport", "PadicPayload", "RealPayload",
    "TABLE_1", "error_term_H", "infer_lambda", "lambda_padic", "lambda_real",
    "local_report", "root_numbers", "table2_row",
]

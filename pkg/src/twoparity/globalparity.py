"""Products of the local terms over all places of Q."""
from __future__ import annotations

from dataclasses import dataclass, field

from .arith import REAL_PLACE, Place, hilbert_places
from .curves import RationalCubic, integralize
from .errors import NotIntegral, StrictModeUnsupported
from .local import LocalParityReport, error_term_H, infer_lambda, local_report

STRICT = "strict"
INFERRED = "inferred"


def relevant_places(f: RationalCubic, integral: bool = True) -> list[Place]:
    """Real, Q_2 and every prime dividing b, c, L or the discriminant.

    Outside this set every Hilbert entry is a unit at an odd prime and the
    reduction is good, so all local quantities are +1.  Including primes of
    ``b`` is more than strictly needed but harmless.
    """
    if integral and not f.is_integral:
        raise NotIntegral(f"{f} is not integral; integralize first")
    return hilbert_places(f.b, f.c, f.L, f.delta)


def global_product_H(f: RationalCubic) -> tuple[int, dict[Place, int]]:
    g, _ = integralize(f)
    vector = {v: error_term_H(g, v) for v in relevant_places(g)}
    prod = 1
    for h in vector.values():
        prod *= h
    return prod, vector


@dataclass(frozen=True)
class GlobalReport:
    cubic: RationalCubic
    mode: str
    reports: tuple
    product_H: int
    product_lambda: int
    product_w: int
    inferred_places: tuple = ()
    all_identities: bool = field(default=True)

    @property
    def places(self) -> list[Place]:
        return [r.place for r in self.reports]

    def to_json(self):
        return {
            "cubic": self.cubic.literal(),
            "mode": self.mode,
            "relevant_places": [v.to_json() for v in self.places],
            "reports": [r.to_json() for r in self.reports],
            "product_H": self.product_H,
            "product_lambda": {"value": self.product_lambda, "mode": self.mode},
            "product_w": {"value": self.product_w, "mode": self.mode},
            "inferred_places": [v.to_json() for v in self.inferred_places],
            "all_identities": self.all_identities,
        }


def global_identity(f: RationalCubic, mode: str = STRICT) -> GlobalReport:
    """Check ``prod lambda = prod w_E w_JacE'`` over the relevant places.

    In strict mode every place must be computed directly.  In inferred mode
    lambda at an unsupported place is taken to be ``w_E w_JacE' * H`` with the
    unknown ``w_E w_JacE'`` set to +1 and the place listed as assumed.  The
    unknown factor sits on both sides of the global identity, so the check
    reduces to the computed places plus the product formula for H.
    """
    if mode not in (STRICT, INFERRED):
        raise ValueError(f"unknown mode {mode!r}")
    g, _ = integralize(f)
    places = relevant_places(g)
    reports = [local_report(g, v) for v in places]
    missing = [r.place for r in reports if not r.supported]
    if mode == STRICT and missing:
        raise StrictModeUnsupported(missing)

    prod_H = prod_lam = prod_w = 1
    for r in reports:
        prod_H *= r.H
        if r.supported:
            prod_lam *= r.lam
            prod_w *= r.ww
        else:
            prod_lam *= infer_lambda(g, r.place, ww=1).value
    all_ok = all(r.identity_holds for r in reports if r.supported)
    all_ok = all_ok and prod_H == 1 and prod_lam == prod_w
    return GlobalReport(g, mode, tuple(reports), prod_H, prod_lam, prod_w,
                        tuple(missing), all_ok)


__all__ = [
    "GlobalReport", "INFERRED", "REAL_PLACE", "STRICT", "global_identity",
    "global_product_H", "relevant_places", "LocalParityReport",
]

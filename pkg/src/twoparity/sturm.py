"""Sturm chains, exact real-root counting and the chain-based error term.

The chain is ``P0 = f``, ``P1 = f'`` and ``P_{i+1} = -(P_{i-1} mod P_i)``,
stopping before the first zero remainder.  For a monic separable ``f`` whose
chain has ``deg P_i = deg f - i`` and ``P_i(0) != 0`` for ``i < deg f``, the
error term is

    prod_{i=0}^{deg f - 1} (-P_i(0), P_{i+1}(0)) * (c_i, -c_{i+1})

with ``c_i`` the leading coefficient of ``P_i``.  For cubics with ``b, L != 0``
it coincides with the Hilbert-symbol error term of the local-parity module.
Stopping one step earlier, at ``deg f - 2``, drops the factor involving the
constant ``P_{deg f}`` and breaks that agreement for most cubics, e.g.
``(x-1)(x-2)(x-27)`` at 7; ``truncated=True`` reproduces that shorter product.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import Place, hilbert, hilbert_places, to_q
from .errors import DegenerateSturm, DegreeTooSmall, NotSquarefree
from .poly import UniPoly


@dataclass(frozen=True)
class SturmSequence:
    polys: tuple
    constants_at_zero: tuple
    leads: tuple
    degenerate: bool
    reason: str | None = None
    failing_index: int | None = None

    @property
    def squarefree(self) -> bool:
        return self.polys[-1].degree == 0

    def require_nondegenerate(self):
        if self.degenerate:
            raise DegenerateSturm(self.failing_index, self.reason)
        return self


def _degeneracy(polys, n):
    for i in range(n + 1):
        if i >= len(polys):
            return i, "chain terminated early (zero remainder)"
        if polys[i].degree != n - i:
            return i, f"deg P_{i} = {polys[i].degree}, expected {n - i}"
    for i in range(n):
        if polys[i](0) == 0:
            return i, f"P_{i}(0) = 0"
    return None


def sturm_sequence(f: UniPoly) -> SturmSequence:
    if f.degree < 1:
        raise DegreeTooSmall("Sturm chain needs a nonconstant polynomial")
    polys = [f, f.derivative()]
    while True:
        nxt = -(polys[-2] % polys[-1])
        if nxt.is_zero():
            break
        polys.append(nxt)
    bad = _degeneracy(polys, f.degree)
    return SturmSequence(
        polys=tuple(polys),
        constants_at_zero=tuple(P(0) for P in polys),
        leads=tuple(P.lead for P in polys),
        degenerate=bad is not None,
        reason=None if bad is None else bad[1],
        failing_index=None if bad is None else bad[0],
    )


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _changes(signs) -> int:
    nz = [s for s in signs if s]
    return sum(1 for s, t in zip(nz, nz[1:]) if s != t)


def sign_changes(seq: SturmSequence, x) -> int:
    """Sign changes of ``P_i(x)`` ignoring zeros; ``x`` may be ``math.inf`` or ``-math.inf``."""
    if isinstance(x, float) and math.isinf(x):
        negative = x < 0
        return _changes(
            _sign(P.lead) * (-1 if negative and P.degree % 2 else 1) for P in seq.polys
        )
    x = to_q(x)
    return _changes(_sign(P(x)) for P in seq.polys)


def count_roots(f: UniPoly, a=None, b=math.inf, seq: SturmSequence | None = None) -> int:
    """Number of distinct real roots of squarefree ``f`` in ``(a, b]``.

    ``a = None`` (or ``-inf``) and ``b = inf`` stand for the infinite ends.
    """
    seq = seq or sturm_sequence(f)
    if not seq.squarefree:
        raise NotSquarefree("f shares a root with f'")
    a = -math.inf if a is None else a
    b = math.inf if b is None else b
    if not isinstance(a, float) and not isinstance(b, float) and to_q(a) > to_q(b):
        return 0
    return sign_changes(seq, a) - sign_changes(seq, b)


def _pairs(seq: SturmSequence, truncated: bool = False):
    n = seq.polys[0].degree
    P0, cs = seq.constants_at_zero, seq.leads
    for i in range(n - 1 if truncated else n):
        yield -P0[i], P0[i + 1]
        yield cs[i], -cs[i + 1]


def generalized_H(f: UniPoly, place: Place, seq: SturmSequence | None = None,
                  truncated: bool = False) -> int:
    if f.lead != 1:
        raise ValueError("generalized error term is defined for monic f")
    seq = (seq or sturm_sequence(f)).require_nondegenerate()
    out = 1
    for x, y in _pairs(seq, truncated):
        out *= hilbert(x, y, place)
    return out


def chain_places(seq: SturmSequence) -> list[Place]:
    """Real, Q_2 and every prime in the support of some ``P_i(0)`` or ``c_i``."""
    return hilbert_places(*(x for pair in _pairs(seq) for x in pair))


def generalized_product_check(f: UniPoly) -> int:
    seq = sturm_sequence(f).require_nondegenerate()
    out = 1
    for v in chain_places(seq):
        out *= generalized_H(f, v, seq)
    return out


def cubic_consistency(f) -> bool:
    """Whether the chain error term equals the cubic error term at all relevant places.

    ``f`` is a :class:`~twoparity.curves.RationalCubic` with ``b, L != 0``.
    """
    from .globalparity import relevant_places
    from .local import error_term_H

    if f.b == 0 or f.L == 0:
        raise ValueError("cubic consistency needs b != 0 and L != 0")
    seq = sturm_sequence(f.poly).require_nondegenerate()
    places = set(relevant_places(f, integral=False)) | set(chain_places(seq))
    return all(generalized_H(f.poly, v, seq) == error_term_H(f, v) for v in places)


def real_root_counts(f: UniPoly) -> tuple[int, int]:
    """``(real roots, positive real roots)`` of a squarefree polynomial."""
    seq = sturm_sequence(f)
    total = count_roots(f, None, math.inf, seq)
    positive = count_roots(f, Fraction(0), math.inf, seq)
    return total, positive


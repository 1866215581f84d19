"""q-Pochhammer products, theta functions and the named product families.

Every product here is a finite or infinite product of factors
``(1 - c q**e)``.  Factors with ``e <= 0`` are multiplied exactly first (an
infinite progression has only finitely many), the rest are applied in place
until their exponent passes the truncation order.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .series import (
    QSeries,
    SeriesError,
    dilate,
    div_factor,
    mul,
    mul_factor,
    one,
    zero,
)
from .series import _ring_of

INFINITE = None


class DivergentProductError(SeriesError):
    """An infinite product whose factors never pass the truncation order."""


class ZeroThetaError(ArithmeticError):
    """``j(q**b; q**M)`` vanishes identically because ``b = 0 (mod M)``."""


@dataclass(frozen=True)
class PochSpec:
    """``prod_{i < count} (1 - coef * q**(a_exp + i*step))``; ``count=None`` is infinite."""

    coef: object = 1
    a_exp: int = 0
    step: int = 1
    count: Optional[int] = INFINITE

    def exponents(self, order: int) -> Iterable[int]:
        """Factor exponents that can influence coefficients up to ``order``."""
        if self.count is INFINITE:
            if self.step < 1:
                raise DivergentProductError("infinite product needs a positive step")
            e = self.a_exp
            while e <= order:
                yield e
                e += self.step
        else:
            for i in range(self.count):
                yield self.a_exp + i * self.step


def _mul_poly(s: QSeries, poly: Dict[int, object]) -> QSeries:
    """Exact Laurent polynomial (as ``{exp: coef}``) times a truncated series."""
    ring = s.ring
    poly = {d: c for d, c in poly.items() if c}
    if not poly:
        return zero(s.order, ring)
    dmin = min(poly)
    lower = s.lower + dmin
    order = s.order + dmin
    out = [ring.zero] * (order - lower + 1)
    for d, c in poly.items():
        for i, x in enumerate(s.coefs):
            j = i + d - dmin
            if j >= len(out):
                break
            if x:
                out[j] = out[j] + c * x
    return QSeries(out, lower, order, ring)


def poch(spec: PochSpec, order: int) -> QSeries:
    """Truncated (finite or infinite) q-Pochhammer product, valid to ``order``."""
    ring = _ring_of(spec.coef)
    c = ring.coerce(spec.coef)
    head: Dict[int, object] = {0: ring.one}
    pos = []
    for e in spec.exponents(order):
        if e > 0:
            pos.append(e)
            continue
        # multiply the exact head by (1 - c q^e)
        nxt: Dict[int, object] = dict(head)
        for d, x in head.items():
            nxt[d + e] = nxt.get(d + e, ring.zero) - c * x
        head = {d: x for d, x in nxt.items() if x}
        if not head:
            return zero(order, ring)
    v = min(head)
    inner = order - v
    tail = one(inner, ring) if inner >= 0 else zero(inner, ring)
    for e in pos:
        if e > inner:
            break
        tail = mul_factor(tail, c, e)
    return _mul_poly(tail, head)


def poch_inv(spec: PochSpec, order: int) -> QSeries:
    """``1 / poch(spec)`` built directly from geometric factors."""
    ring = _ring_of(spec.coef)
    c = ring.coerce(spec.coef)
    scale = ring.one
    shift = 0
    factors = []
    exps = list(spec.exponents(order)) if spec.count is not INFINITE else None
    if exps is None:
        # negative exponents come first in an increasing progression
        neg = []
        e = spec.a_exp
        if spec.step < 1:
            raise DivergentProductError("infinite product needs a positive step")
        while e <= 0:
            neg.append(e)
            e += spec.step
        shift = sum(-x for x in neg)
        exps = list(spec.exponents(order - shift))
    for e in exps:
        if e > 0:
            factors.append((c, e))
        elif e == 0:
            if not (1 - c):
                raise ZeroDivisionError("product has a vanishing factor (1 - q^0)")
            scale = scale * ring.inverse(1 - c)
        else:
            # 1/(1 - c q^-k) = -c^-1 q^k / (1 - c^-1 q^k)
            ci = ring.inverse(c)
            scale = scale * (-ci)
            factors.append((ci, -e))
    if spec.count is not INFINITE:
        shift = sum(-e for e in exps if e < 0)
    inner = order - shift
    tail = one(inner, ring) if inner >= 0 else zero(inner, ring)
    for ci, e in factors:
        if e <= inner:
            tail = div_factor(tail, ci, e)
    return tail.shift(shift).scale(scale)


def _neg_valuation(a: int, M: int) -> int:
    """Valuation of ``(q**a; q**M)_inf`` contributed by its nonpositive factors."""
    return sum(range(a, 0, M)) if a < 0 else 0


def qprod(exps: Sequence[int], M: int, order: int, coef=1) -> QSeries:
    """``(q**a1, q**a2, ...; q**M)_inf`` for the exponents in ``exps``."""
    # every factor is built high enough that the Laurent heads cannot eat validity
    inner = order - sum(_neg_valuation(a, M) for a in exps)
    result = None
    for a in exps:
        f = poch(PochSpec(coef, a, M), inner)
        result = f if result is None else mul(result, f)
    return result.truncate(order) if result is not None else one(order)


def qprod_inv(exps: Sequence[int], M: int, order: int) -> QSeries:
    """``1 / (q**a1, q**a2, ...; q**M)_inf``."""
    result = one(order)
    for a in exps:
        result = mul(result, poch_inv(PochSpec(1, a, M), order)).truncate(order)
    return result


def qquot(num: Sequence[int], den: Sequence[int], M: int, order: int) -> QSeries:
    """``(num...; q**M)_inf / (den...; q**M)_inf``."""
    return mul(qprod(num, M, order), qprod_inv(den, M, order)).truncate(order)


def jtheta(b: int, M: int, order: int) -> QSeries:
    """``j(q**b; q**M) = (q**b, q**(M-b), q**M; q**M)_inf``."""
    if M < 1:
        raise SeriesError("theta modulus must be positive")
    if b % M == 0:
        raise ZeroThetaError(f"j(q^{b}; q^{M}) vanishes identically")
    return qprod([b, M - b, M], M, order)


# ------------------------------------------------------------------ families
_MOD5 = {"G": (1, 4), "H": (2, 3)}
_MOD7 = {"L": (1, 6), "N": (2, 5), "Q": (3, 4)}
# mod-49 quotients A..E: (numerator, denominator) exponents
_MOD49 = {
    "A": ((49,), (7, 42)),
    "B": ((14, 35, 49), (7, 21, 28, 42)),
    "C": ((49,), (14, 35)),
    "D": ((49,), (21, 28)),
    "E": ((7, 42, 49), (14, 21, 28, 35)),
}

_cache: Dict[Tuple[str, int], QSeries] = {}
_cache_lock = threading.Lock()


def _build_named(name: str, order: int) -> QSeries:
    if name == "euler":
        return poch(PochSpec(1, 1, 1), order)
    if name in _MOD5:
        return qprod_inv(_MOD5[name], 5, order)
    if name in _MOD7:
        return qprod_inv(_MOD7[name], 7, order)
    if name in _MOD49:
        num, den = _MOD49[name]
        return qquot(num, den, 49, order)
    for prefix, M in (("P25", 25), ("P49", 49)):
        if name.startswith(prefix + "(") and name.endswith(")"):
            i = int(name[len(prefix) + 1:-1])
            k = 5 if M == 25 else 7
            if not 0 <= i < k:
                raise KeyError(name)
            if i == 0:
                return qprod([M], M, order)
            return qprod([k * i, M - k * i], M, order)
    raise KeyError(f"unknown named product {name!r}")


def named_product(name: str, order: int) -> QSeries:
    """Memoized named product: ``euler``, ``G``, ``H``, ``L``, ``N``, ``Q``,
    ``A``..``E``, ``P25(i)`` and ``P49(i)``."""
    key = (name, order)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    value = _build_named(name, order)
    with _cache_lock:
        _cache.setdefault(key, value)
    return value


NAMED = ("euler", "G", "H", "L", "N", "Q", "A", "B", "C", "D", "E") + tuple(
    f"P25({i})" for i in range(5)
) + tuple(f"P49({i})" for i in range(7))


def euler(order: int) -> QSeries:
    return named_product("euler", order)


def dilated(name: str, k: int, order: int) -> QSeries:
    """``name(q**k)`` valid to ``order``."""
    base_order = -(-order // k)
    return dilate(named_product(name, base_order), k).truncate(order)

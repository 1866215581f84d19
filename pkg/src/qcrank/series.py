"""Truncated Laurent series in q over an exact coefficient ring.

A :class:`QSeries` stores the coefficients of ``q**lower .. q**order``
densely.  ``order`` is the validity bound: every coefficient at or below it
is exact, everything above it is unknown.  Arithmetic propagates that bound
honestly, so a product never reports a coefficient it cannot know.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .rings import (
    DD,
    QQ,
    Dual,
    NotInvertibleError,
    Ring,
    ZL,
    ZLaurent,
    ZLaurentRing,
    common_ring,
    normalize,
)


class SeriesError(ValueError):
    """Invalid series construction."""


class NoInverseError(ArithmeticError):
    """The series has no inverse (zero, or non-unit leading coefficient)."""


class ModularReductionError(ArithmeticError):
    """A coefficient denominator is not invertible modulo the modulus."""


def _ring_of(c) -> Ring:
    if isinstance(c, ZLaurent):
        return ZL(DD if any(isinstance(v, Dual) for v in c.terms.values()) else QQ)
    if isinstance(c, Dual):
        return DD
    return QQ


class QSeries:
    """Immutable truncated Laurent series ``sum coefs[i] q**(lower+i)``."""

    __slots__ = ("ring", "lower", "order", "coefs")

    def __init__(self, coefs: Sequence, lower: int = 0, order: Optional[int] = None, ring: Ring = QQ):
        coefs = list(coefs)
        if order is None:
            order = lower + len(coefs) - 1
        if order < lower:
            # all known coefficients vanish; keep one slot so order >= lower
            lower = order
            coefs = []
        n = order - lower + 1
        if len(coefs) < n:
            coefs.extend([ring.zero] * (n - len(coefs)))
        elif len(coefs) > n:
            del coefs[n:]
        self.ring = ring
        self.lower = lower
        self.order = order
        self.coefs = tuple(coefs)

    # ------------------------------------------------------------------ basics
    def __getitem__(self, e: int):
        if e > self.order:
            raise IndexError(f"coefficient of q^{e} is beyond validity order {self.order}")
        if e < self.lower:
            return self.ring.zero
        return self.coefs[e - self.lower]

    def items(self) -> Iterator[Tuple[int, object]]:
        """Nonzero ``(exponent, coefficient)`` pairs in increasing order."""
        for i, c in enumerate(self.coefs):
            if c:
                yield self.lower + i, c

    def valuation(self) -> int:
        """Exponent of the lowest nonzero coefficient; ``order + 1`` if none known."""
        for i, c in enumerate(self.coefs):
            if c:
                return self.lower + i
        return self.order + 1

    def is_zero(self) -> bool:
        return self.valuation() > self.order

    def coefficients(self, start: int, stop: int) -> list:
        """Coefficients of ``q**start .. q**stop`` inclusive."""
        return [self[e] for e in range(start, stop + 1)]

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend validity from {self.order} to {order}")
        return QSeries(self.coefs, self.lower, order, self.ring)

    def to_ring(self, ring: Ring) -> "QSeries":
        if ring == self.ring:
            return self
        return QSeries([ring.coerce(c) for c in self.coefs], self.lower, self.order, ring)

    def map(self, fn, ring: Optional[Ring] = None) -> "QSeries":
        ring = ring or self.ring
        return QSeries([fn(c) for c in self.coefs], self.lower, self.order, ring)

    # -------------------------------------------------------------- arithmetic
    def _coerce_pair(self, other: "QSeries") -> Tuple["QSeries", "QSeries"]:
        ring = common_ring(self.ring, other.ring)
        return self.to_ring(ring), other.to_ring(ring)

    def _as_series(self, other) -> Optional["QSeries"]:
        if isinstance(other, QSeries):
            return other
        try:
            ring = common_ring(self.ring, _ring_of(other))
            if self.order < 0:
                return zero(self.order, ring)
            return monomial(ring.coerce(other), 0, self.order, ring)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        a, b = self._coerce_pair(other)
        lower = min(a.lower, b.lower)
        order = min(a.order, b.order)
        out = []
        for e in range(lower, order + 1):
            out.append(a[e] + b[e])
        return QSeries(out, lower, order, a.ring)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coefs], self.lower, self.order, self.ring)

    def __sub__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "QSeries":
        ring = common_ring(self.ring, _ring_of(c))
        s = self.to_ring(ring)
        c = ring.coerce(c)
        return QSeries([x * c for x in s.coefs], s.lower, s.order, ring)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return mul(self, invert(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return invert(self) ** (-n)
        if n == 0:
            return one(max(self.order, 0), self.ring)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else mul(result, base)
            n >>= 1
            if n:
                base = mul(base, base)
        return result

    def shift(self, k: int) -> "QSeries":
        """Multiply by ``q**k``."""
        return QSeries(self.coefs, self.lower + k, self.order + k, self.ring)

    # ----------------------------------------------------------------- display
    def __repr__(self):
        return f"QSeries({self.ring}, lower={self.lower}, order={self.order}, {self.terms_str(8)})"

    def terms_str(self, limit: Optional[int] = None) -> str:
        parts = []
        for e, c in self.items():
            parts.append(f"({c})q^{e}")
            if limit is not None and len(parts) >= limit:
                parts.append("...")
                break
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(q^{self.order + 1})"

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return first_mismatch(self, other) is None and self.order == other.order

    __hash__ = None  # type: ignore[assignment]


# ------------------------------------------------------------------ builders
def monomial(c, e: int, order: int, ring: Optional[Ring] = None) -> QSeries:
    """The series ``c * q**e`` known exactly to ``order``."""
    if e > order:
        raise SeriesError(f"monomial exponent {e} exceeds order {order}")
    ring = ring or _ring_of(c)
    return QSeries([ring.coerce(c)], e, order, ring)


def zero(order: int, ring: Ring = QQ) -> QSeries:
    return QSeries([], order, order, ring)


def one(order: int, ring: Ring = QQ) -> QSeries:
    return monomial(ring.one, 0, order, ring)


def from_dict(terms: dict, order: int, ring: Ring = QQ) -> QSeries:
    """Build from ``{exponent: coefficient}``; exponents above ``order`` are dropped."""
    keys = [e for e in terms if e <= order]
    lower = min(keys) if keys else order
    coefs = [ring.zero] * (order - lower + 1)
    for e in keys:
        coefs[e - lower] = ring.coerce(terms[e])
    return QSeries(coefs, lower, order, ring)


# ------------------------------------------------------------------- kernels
def mul(a: QSeries, b: QSeries) -> QSeries:
    """Truncated product, valid to ``min(N1 + v2, N2 + v1)``."""
    a, b = a._coerce_pair(b)
    ring = a.ring
    va, vb = a.valuation(), b.valuation()
    order = min(a.order + vb, b.order + va)
    if va > a.order or vb > b.order:
        return zero(order, ring)
    lower = va + vb
    ac = a.coefs[va - a.lower:]
    bc = b.coefs[vb - b.lower:]
    n = order - lower + 1
    if n <= 0:
        return zero(order, ring)
    ac = ac[:n]
    bc = bc[:n]
    out = [ring.zero] * n
    for i, x in enumerate(ac):
        if not x:
            continue
        lim = n - i
        for j, y in enumerate(bc[:lim]):
            if y:
                out[i + j] = out[i + j] + x * y
    if ring is QQ:
        out = [normalize(c) if type(c) is Fraction else c for c in out]
    return QSeries(out, lower, order, ring)


def invert(s: QSeries) -> QSeries:
    """Multiplicative inverse; the lowest nonzero coefficient must be a unit."""
    v = s.valuation()
    if v > s.order:
        raise NoInverseError("zero series has no inverse")
    ring = s.ring
    lead = s[v]
    try:
        lead_inv = ring.inverse(lead)
    except (NotInvertibleError, ZeroDivisionError) as exc:
        raise NoInverseError(f"leading coefficient {lead} is not a unit: {exc}") from exc
    order = s.order - 2 * v
    n = order + v + 1  # number of coefficients of the unit part to compute
    u = s.coefs[v - s.lower:]
    out = []
    for k in range(n):
        acc = ring.zero if k else ring.one
        for i in range(1, min(k, len(u) - 1) + 1):
            ui = u[i]
            if ui:
                acc = acc - ui * out[k - i]
        c = acc * lead_inv
        if ring is QQ and type(c) is Fraction:
            c = normalize(c)
        out.append(c)
    return QSeries(out, -v, order, ring)


def mul_factor(s: QSeries, c, e: int) -> QSeries:
    """``s * (1 - c q**e)`` for ``e >= 1``, without a general convolution."""
    if e < 1:
        raise SeriesError("mul_factor needs a positive exponent")
    ring = common_ring(s.ring, _ring_of(c))
    s = s.to_ring(ring)
    c = ring.coerce(c)
    coefs = list(s.coefs)
    for i in range(len(coefs) - 1, e - 1, -1):
        prev = coefs[i - e]
        if prev:
            coefs[i] = coefs[i] - c * prev
    if ring is QQ:
        coefs = [normalize(x) if type(x) is Fraction else x for x in coefs]
    return QSeries(coefs, s.lower, s.order, ring)


def div_factor(s: QSeries, c, e: int) -> QSeries:
    """``s / (1 - c q**e)`` for ``e >= 1`` (geometric expansion)."""
    if e < 1:
        raise SeriesError("div_factor needs a positive exponent")
    ring = common_ring(s.ring, _ring_of(c))
    s = s.to_ring(ring)
    c = ring.coerce(c)
    coefs = list(s.coefs)
    for i in range(e, len(coefs)):
        prev = coefs[i - e]
        if prev:
            coefs[i] = coefs[i] + c * prev
    if ring is QQ:
        coefs = [normalize(x) if type(x) is Fraction else x for x in coefs]
    return QSeries(coefs, s.lower, s.order, ring)


def geometric(c, e: int, order: int, ring: Optional[Ring] = None) -> QSeries:
    """``1 / (1 - c q**e)`` for ``e >= 1``."""
    ring = ring or _ring_of(c)
    return div_factor(one(order, ring), c, e)


# ---------------------------------------------------------------- operations
def dilate(s: QSeries, k: int) -> QSeries:
    """Substitute ``q -> q**k``."""
    if k < 1:
        raise SeriesError("dilation factor must be positive")
    if k == 1:
        return s
    zero_ = s.ring.zero
    out = [zero_] * ((s.order - s.lower) * k + 1)
    for i, c in enumerate(s.coefs):
        out[i * k] = c
    return QSeries(out, s.lower * k, s.order * k, s.ring)


def dissect(s: QSeries, M: int) -> List[QSeries]:
    """Split by exponent residue mod ``M``; component ``r`` holds exponents ``= r (mod M)``."""
    if M < 1:
        raise SeriesError("dissection modulus must be positive")
    zero_ = s.ring.zero
    parts = []
    for r in range(M):
        coefs = [c if (s.lower + i - r) % M == 0 else zero_ for i, c in enumerate(s.coefs)]
        parts.append(QSeries(coefs, s.lower, s.order, s.ring))
    return parts


def sift(s: QSeries, M: int, r: int) -> QSeries:
    """Series ``sum_n a(M n + r) q**n`` of the residue-``r`` component, contracted.

    Only exponents ``M n + r`` with ``M n + r <= order`` are used, so the
    result is valid to ``(order - r) // M``.
    """
    terms = {}
    for e, c in s.items():
        if (e - r) % M == 0:
            terms[(e - r) // M] = c
    return from_dict(terms, (s.order - r) // M, s.ring)


def reduce_mod(s: QSeries, m: int) -> QSeries:
    """Reduce rational coefficients to integers in ``[0, m)``."""
    if m < 2:
        raise SeriesError("modulus must be at least 2")
    if s.ring is not QQ:
        raise ModularReductionError(f"reduce_mod needs rational coefficients, got {s.ring}")
    out = []
    for c in s.coefs:
        if isinstance(c, int):
            out.append(c % m)
            continue
        den = c.denominator
        try:
            inv = pow(den, -1, m)
        except ValueError:
            raise ModularReductionError(f"denominator {den} is not invertible mod {m}") from None
        out.append(c.numerator * inv % m)
    return QSeries(out, s.lower, s.order, QQ)


def deriv_at_one(s: QSeries) -> QSeries:
    """The eps-part of a dual-coefficient series (d/dx at x = 1)."""
    if s.ring is QQ:
        return zero(s.order)
    if s.ring is not DD:
        raise SeriesError(f"deriv_at_one needs dual coefficients, got {s.ring}")
    return s.map(lambda c: c.deriv, QQ)


def value_part(s: QSeries) -> QSeries:
    """The real part of a dual-coefficient series (its value at x = 1)."""
    if s.ring is QQ:
        return s
    if s.ring is not DD:
        raise SeriesError(f"value_part needs dual coefficients, got {s.ring}")
    return s.map(lambda c: c.value, QQ)


def z_class_extract(s: QSeries, k: int, b: int) -> QSeries:
    """Sum z-coefficients over z-exponents ``= b (mod k)`` for every q-power."""
    if not isinstance(s.ring, ZLaurentRing):
        if b % k == 0:
            return s
        return s.map(lambda c: s.ring.zero)
    base = s.ring.base
    return s.map(lambda c: base.coerce(c.class_sum(k, b)), base)


def z_coefficient(s: QSeries, e: int) -> QSeries:
    """Coefficient series of ``z**e``."""
    base = s.ring.base
    return s.map(lambda c: base.coerce(c.coefficient(e)), base)


# --------------------------------------------------------------- comparison
def first_mismatch(a: QSeries, b: QSeries, start: Optional[int] = None, stop: Optional[int] = None):
    """First exponent in ``[start, stop]`` where ``a`` and ``b`` differ.

    ``stop`` defaults to the smaller validity order.  Returns
    ``(exponent, a_coef, b_coef)`` or ``None``.
    """
    stop = min(a.order, b.order) if stop is None else min(stop, a.order, b.order)
    if start is None:
        start = min(a.lower, b.lower)
    for e in range(start, stop + 1):
        x, y = a[e], b[e]
        if x != y:
            return e, x, y
    return None


def agree_to(a: QSeries, b: QSeries, order: Optional[int] = None, start: Optional[int] = None) -> bool:
    return first_mismatch(a, b, start, order) is None


def sum_series(terms: Iterable[QSeries], order: int, ring: Ring = QQ) -> QSeries:
    total = zero(order, ring)
    for t in terms:
        total = total + t
    return total

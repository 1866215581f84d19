"""Bilateral Lerch-type sums, Lambert series and Appell-Lerch sums.

The basic object is

    sum_m (-1)**m q**((A m**2 + B m)/2 + C) / (1 - q**(D m + E))

summed over all integers ``m`` (or all ``m != 0`` when primed).  Terms with a
negative denominator exponent are rewritten with
``1/(1 - q**-k) = -q**k / (1 - q**k)`` before the geometric expansion, so the
only negative exponents that survive are the genuine Laurent ones.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

from .products import ZeroThetaError, euler, jtheta, named_product
from .series import (
    QSeries,
    SeriesError,
    dilate,
    from_dict,
    invert,
    monomial,
    mul,
    one,
    zero,
)


class PoleError(ArithmeticError):
    """A term has denominator ``1 - q**0``."""


@dataclass(frozen=True)
class BilateralSpec:
    A: int
    B: int
    C: int = 0
    D: int = 0
    E: int = 1
    primed: bool = False

    def __post_init__(self):
        if self.A < 1:
            raise SeriesError("quadratic coefficient A must be positive")
        if (self.A + self.B) % 2:
            raise SeriesError(f"A + B must be even, got A={self.A}, B={self.B}")

    def exponent(self, m: int) -> int:
        return (self.A * m * m + self.B * m) // 2 + self.C

    def denominator(self, m: int) -> int:
        return self.D * m + self.E

    def term_start(self, m: int) -> Tuple[int, int, int]:
        """``(sign, first exponent, period)`` of term ``m`` after the rewrite."""
        sign = -1 if m % 2 else 1
        e = self.exponent(m)
        d = self.denominator(m)
        if d == 0:
            raise PoleError(f"term m={m} of {self} has denominator 1 - q^0")
        if d > 0:
            return sign, e, d
        return -sign, e - d, -d

    def terms(self, order: int) -> Iterator[int]:
        """The indices ``m`` whose terms reach exponents ``<= order``.

        Walks outward from 0 in both directions and stops after three
        consecutive indices start above ``order`` while climbing.
        """
        for direction in (1, -1):
            m = 0 if direction == 1 else -1
            above = 0
            prev = None
            while True:
                skip = self.primed and m == 0
                if skip:
                    start = None
                else:
                    if self.denominator(m) == 0:
                        raise PoleError(f"term m={m} of {self} has denominator 1 - q^0")
                    start = self.term_start(m)[1]
                if start is not None and start <= order:
                    above = 0
                    yield m
                elif start is not None:
                    climbing = prev is None or start > prev
                    above = above + 1 if climbing else 0
                    if above >= 3:
                        break
                prev = start if start is not None else prev
                m += direction


def _accumulate(spec: BilateralSpec, order: int, acc: Dict[int, int], weight: int = 1) -> None:
    for m in spec.terms(order):
        sign, start, period = spec.term_start(m)
        for e in range(start, order + 1, period):
            acc[e] += sign * weight


def eval_bilateral(spec: BilateralSpec, order: int) -> QSeries:
    """The sum described by ``spec`` truncated at ``order`` (exact)."""
    acc: Dict[int, int] = defaultdict(int)
    _accumulate(spec, order, acc)
    return from_dict(acc, order)


def eval_primed(spec: BilateralSpec, order: int) -> QSeries:
    """As :func:`eval_bilateral` with the ``m = 0`` term omitted."""
    if not spec.primed:
        raise SeriesError("eval_primed needs a primed spec")
    return eval_bilateral(spec, order)


def bilateral_combination(terms, order: int) -> QSeries:
    """``sum weight * eval_bilateral(spec)`` for ``(weight, spec)`` pairs.

    Integer weights accumulate into one table, so a long linear combination
    costs one pass per spec and no series additions.
    """
    acc: Dict[int, int] = defaultdict(int)
    for weight, spec in terms:
        _accumulate(spec, order, acc, weight)
    return from_dict(acc, order)


def lambert(a: int, b: int, c: int, d: int, order: int) -> QSeries:
    """``sum_{j >= 0} q**(b + a j) / (1 - q**(d + c j))``."""
    if d < 1 or c < 0:
        raise PoleError("denominator exponents d + c*j must be positive for all j >= 0")
    if a < 1:
        raise SeriesError("numerator step a must be positive for the sum to converge")
    acc: Dict[int, int] = defaultdict(int)
    j = 0
    while b + a * j <= order:
        for e in range(b + a * j, order + 1, d + c * j):
            acc[e] += 1
        j += 1
    return from_dict(acc, order) if acc else zero(order)


# ---------------------------------------------------------------- Appell-Lerch
def _padded(build, order: int, start_pad: int) -> QSeries:
    """Build at ``order + pad`` and grow the pad until the result reaches ``order``."""
    pad = max(start_pad, 0)
    while True:
        s = build(order + pad)
        if s.order >= order:
            return s.truncate(order)
        pad += max(order - s.order, 1)


def appell_sum_spec(a: int, M: int, b: int) -> BilateralSpec:
    """``sum_r (-1)^r q^(M r(r+1)/2 + b r) / (1 - q^(a + b + M r))``."""
    return BilateralSpec(A=M, B=M + 2 * b, C=0, D=M, E=a + b)


def appell_m(a: int, M: int, b: int, order: int) -> QSeries:
    """``m(q**a, q**M, q**b)`` as a Laurent series valid to ``order``."""
    if b % M == 0:
        raise ZeroThetaError(f"j(q^{b}; q^{M}) vanishes, m(x, q, z) undefined")
    spec = appell_sum_spec(a, M, b)

    def build(n):
        theta = jtheta(b, M, n)
        prefactor = mul(monomial(-1, b, n + abs(b) + 1), invert(theta))
        return mul(prefactor, eval_bilateral(spec, n))

    return _padded(build, order, 2 * abs(b) + abs(a) + M)


def appell_change_z(a: int, M: int, b0: int, b1: int, order: int) -> QSeries:
    """``m(x,q,z1) - m(x,q,z0)`` via its theta-quotient form at ``x=q**a, z=q**b``, base ``q**M``.

    Equals ``z0 J^3 j(z1/z0) j(x z0 z1) / (j(z0) j(z1) j(x z0) j(x z1))`` with
    ``J = (q**M; q**M)_inf``.
    """
    for b in (b0, b1, a + b0, a + b1):
        if b % M == 0:
            raise ZeroThetaError(f"j(q^{b}; q^{M}) vanishes in the denominator")
    if (b1 - b0) % M == 0 or (a + b0 + b1) % M == 0:
        return zero(order)

    def build(n):
        num = mul(jtheta(b1 - b0, M, n), jtheta(a + b0 + b1, M, n))
        j3 = dilate(euler(-(-n // M)), M) ** 3
        num = mul(num, j3)
        den = one(n)
        for b in (b0, b1, a + b0, a + b1):
            den = mul(den, jtheta(b, M, n))
        return mul(num, invert(den)).shift(b0)

    return _padded(build, order, 2 * (abs(b0) + abs(b1) + abs(a)) + M)


# ---------------------------------------------------------------- master series
def master_numerator(k: int, order: int) -> QSeries:
    """``sum_{n>=1} (-1)^n q^(n(n+1)/2) (1-q^n)^(k-2) (1+q^n) / (1-q^(kn))``."""
    if order < 0:
        return zero(order)
    acc: Dict[int, int] = defaultdict(int)
    n = 1
    while n * (n + 1) // 2 <= order:
        sign = -1 if n % 2 else 1
        # polynomial (1 - x)^(k-2) (1 + x) in x = q^n
        poly = [1]
        for _ in range(k - 2):
            poly = [a - b for a, b in zip(poly + [0], [0] + poly)]
        poly = [a + b for a, b in zip(poly + [0], [0] + poly)]
        base = n * (n + 1) // 2
        for i, c in enumerate(poly):
            if not c:
                continue
            for e in range(base + i * n, order + 1, k * n):
                acc[e] += sign * c
        n += 1
    return from_dict(acc, order) if acc else zero(order)


def build_master_lhs(k: int, order: int) -> QSeries:
    """The master series ``master_numerator(k) / (q;q)_inf`` of the crank congruences."""
    if k not in (5, 7):
        raise SeriesError("the master series is defined for k = 5 and k = 7")
    if order < 1:
        raise SeriesError("order must be at least 1")
    return mul(master_numerator(k, order), invert(named_product("euler", order)))

"""The crank generating function and its decomposition by crank residue.

``x`` marks the number of ones, ``z`` the crank and ``q`` the size.  ``x``
may be any scalar of ``QQ`` or ``DD``; passing ``Dual.variable(1)`` yields
the derivative with respect to ``x`` at ``x = 1`` in the ``eps`` part.
"""

from __future__ import annotations

from fractions import Fraction

from .products import PochSpec, euler, poch, poch_inv
from .rings import ZL, Dual, ZLaurent
from .series import (
    QSeries,
    SeriesError,
    _ring_of,
    deriv_at_one,
    div_factor,
    invert,
    mul,
    mul_factor,
    one,
    z_class_extract,
    zero,
)


def crank_gf(x, order: int) -> QSeries:
    """``(x q; q)_inf / (z q, x q / z; q)_inf`` over ``ZL(base)``."""
    base = _ring_of(x)
    ring = ZL(base)
    z = ZLaurent.monomial(base.one, 1)
    xz = ZLaurent.monomial(base.coerce(x), -1)
    s = one(order, ring)
    for e in range(1, order + 1):
        s = mul_factor(s, x, e)
        s = div_factor(s, z, e)
        s = div_factor(s, xz, e)
    return s


def _finite_poch(coef, start: int, count: int, order: int) -> QSeries:
    return poch(PochSpec(coef, start, 1, count), order)


def _finite_poch_inv(start: int, count: int, order: int) -> QSeries:
    return poch_inv(PochSpec(1, start, 1, count), order)


def _prefactor(x, n: int, order: int, full: bool) -> QSeries:
    """``(x q; q)_n / (q; q)_{n-1}`` (or ``/(q; q)_n`` when ``full``)."""
    num = _finite_poch(x, 1, n, order)
    den = _finite_poch_inv(1, n if full else n - 1, order)
    return mul(num, den)


def thm31_rhs(x, order: int, constant: bool = True) -> QSeries:
    """The decomposed form of :func:`crank_gf`, summed term by term.

    ``constant`` keeps the bare ``1`` inside the bracket.  The ``n = 1`` term
    already supplies the constant, so only ``constant=False`` reproduces
    :func:`crank_gf`; the flag exists to test the other form.
    """
    base = _ring_of(x)
    ring = ZL(base)
    z = ZLaurent.monomial(base.one, 1)
    xz = ZLaurent.monomial(base.coerce(x), -1)
    total = one(order, ring) if constant else zero(order, ring)
    n = 1
    while n * (n - 1) // 2 <= order:
        inner = order + n  # the q**-n part shifts validity down by n
        pre = _prefactor(x, n, inner, full=False).to_ring(ring)
        first = div_factor(one(inner, ring), z, n).shift(-n)
        second = div_factor(one(order, ring), xz, n).scale(xz)
        term = mul(pre, first + second).shift(n * (n + 1) // 2)
        total = total + (term if n % 2 else -term)
        n += 1
    return mul(total, invert(euler(order)).to_ring(ring))


def cor32_rhs(x, k: int, b: int, order: int, full: bool = False) -> QSeries:
    """The crank-class ``b (mod k)`` part of :func:`thm31_rhs`, without ``z``.

    ``full=True`` swaps ``(q; q)_{n-1}`` for ``(q; q)_n`` in the prefactor.
    Both forms omit the ``n = 0`` constant, which is ``x``-free.
    """
    if k < 2 or not 0 <= b < k:
        raise SeriesError("need k >= 2 and 0 <= b < k")
    base = _ring_of(x)
    xk = base.coerce(x) ** k
    total = zero(order, base)
    n = 1
    while n * (n - 1) // 2 <= order:
        inner = order + n
        pre = _prefactor(x, n, inner, full)
        geo = div_factor(one(inner, base), 1, n * k)
        first = geo.shift(n * (b - 1))
        second = div_factor(one(inner, base), xk, n * k).shift((k - b - 1) * n)
        second = second.scale(base.coerce(x) ** (k - b))
        bracket = first + second
        term = mul(pre, bracket).shift(n * (n + 1) // 2)
        total = total + (term if n % 2 else -term)
        n += 1
    return mul(total.truncate(order), invert(euler(order)).to_ring(base))


def cor32_derivative(k: int, b: int, order: int, full: bool = False) -> QSeries:
    """``d/dx`` at ``x = 1`` of :func:`cor32_rhs`: the generating series of ``M_omega(b, k, n)``."""
    return deriv_at_one(cor32_rhs(Dual.variable(1), k, b, order, full))


def crank_class_derivative(k: int, b: int, order: int) -> QSeries:
    """Same series by extracting crank class ``b`` from :func:`crank_gf` directly."""
    s = crank_gf(Dual.variable(1), order)
    return deriv_at_one(z_class_extract(s, k, b))


X_VALUES = (Dual.variable(1), 2, Fraction(1, 2))

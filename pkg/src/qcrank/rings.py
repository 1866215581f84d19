"""Exact coefficient rings for truncated q-series.

Three rings are provided:

* ``QQ``  -- rationals.  Elements are plain ``int`` or ``fractions.Fraction``.
* ``DD``  -- dual rationals ``a + b*eps`` with ``eps**2 == 0``.  Evaluating a
  series at ``x = 1 + eps`` and reading off the ``eps`` part gives the
  derivative with respect to ``x`` at ``x = 1``.
* ``ZL(base)`` -- Laurent polynomials in an auxiliary variable ``z`` with
  coefficients in ``QQ`` or ``DD``.

Elements use ordinary Python operators; the ring objects carry the few things
operators cannot: ``zero``, ``one``, unit tests and inverses, and coercion.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Tuple, Union

Scalar = Union[int, Fraction]


class NotInvertibleError(ArithmeticError):
    """Raised when inverting a ring element that is not a unit."""


def normalize(x: Scalar) -> Scalar:
    """Collapse integral fractions to ``int`` so convolutions stay on ints."""
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def _is_scalar(x) -> bool:
    return isinstance(x, Rational)


class Dual:
    """Dual rational ``value + deriv*eps`` with ``eps**2 == 0``."""

    __slots__ = ("value", "deriv")

    def __init__(self, value: Scalar = 0, deriv: Scalar = 0):
        self.value = normalize(value) if type(value) is Fraction else value
        self.deriv = normalize(deriv) if type(deriv) is Fraction else deriv

    @classmethod
    def variable(cls, at: Scalar = 1) -> "Dual":
        """The independent variable evaluated at ``at``: ``at + eps``."""
        return cls(at, 1)

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.value + other.value, self.deriv + other.deriv)
        if _is_scalar(other):
            return Dual(self.value + other, self.deriv)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.value, -self.deriv)

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.value - other.value, self.deriv - other.deriv)
        if _is_scalar(other):
            return Dual(self.value - other, self.deriv)
        return NotImplemented

    def __rsub__(self, other):
        if _is_scalar(other):
            return Dual(other - self.value, -self.deriv)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Dual):
            return Dual(
                self.value * other.value,
                self.value * other.deriv + self.deriv * other.value,
            )
        if _is_scalar(other):
            return Dual(self.value * other, self.deriv * other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        # (a + b eps)^n = a^n + n a^(n-1) b eps
        if n == 0:
            return Dual(1, 0)
        return Dual(self.value**n, n * self.value ** (n - 1) * self.deriv)

    def inverse(self) -> "Dual":
        if self.value == 0:
            raise NotInvertibleError(f"dual number {self!r} has zero value part")
        inv = Fraction(1) / self.value
        return Dual(inv, -self.deriv * inv * inv)

    def __truediv__(self, other):
        if isinstance(other, Dual):
            return self * other.inverse()
        if _is_scalar(other):
            if other == 0:
                raise ZeroDivisionError("division of dual number by zero")
            return Dual(Fraction(self.value) / other, Fraction(self.deriv) / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return self.inverse() * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Dual):
            return self.value == other.value and self.deriv == other.deriv
        if _is_scalar(other):
            return self.deriv == 0 and self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.deriv))

    def __bool__(self):
        return bool(self.value) or bool(self.deriv)

    def __repr__(self):
        return f"Dual({self.value}, {self.deriv})"

    def __str__(self):
        return f"{self.value}+{self.deriv}ε"


class ZLaurent:
    """Finitely supported Laurent polynomial in ``z``.

    ``terms`` maps z-exponent to a nonzero scalar (``QQ`` or ``DD`` element).
    Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Dict[int, object], Iterable[Tuple[int, object]], None] = None):
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        clean: Dict[int, object] = {}
        for e, c in items:
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def monomial(cls, c, e: int = 0) -> "ZLaurent":
        return cls({e: c})

    def _lift(self, other):
        if isinstance(other, ZLaurent):
            return other
        if _is_scalar(other) or isinstance(other, Dual):
            return ZLaurent({0: other})
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return ZLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return ZLaurent({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if _is_scalar(other) or isinstance(other, Dual):
            if not other:
                return ZLaurent()
            return ZLaurent({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, ZLaurent):
            return NotImplemented
        out: Dict[int, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return ZLaurent(out)

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        if len(self.terms) != 1:
            return False
        (c,) = self.terms.values()
        return not isinstance(c, Dual) or c.value != 0

    def inverse(self) -> "ZLaurent":
        # Only signed monomials c*z^e with c a unit are invertible.
        if not self.is_unit():
            raise NotInvertibleError(f"{self} is not a unit in the z-Laurent ring")
        ((e, c),) = self.terms.items()
        inv = c.inverse() if isinstance(c, Dual) else normalize(Fraction(1) / c)
        return ZLaurent({-e: inv})

    def coefficient(self, e: int):
        return self.terms.get(e, 0)

    def class_sum(self, k: int, b: int):
        """Sum of coefficients over z-exponents congruent to ``b`` mod ``k``."""
        total = 0
        for e, c in self.terms.items():
            if (e - b) % k == 0:
                total = total + c
        return total

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"ZLaurent({dict(sorted(self.terms.items()))!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})z^{e}" for e, c in sorted(self.terms.items()))


class Ring:
    """Descriptor for a coefficient ring."""

    name = "ring"
    zero: object = 0
    one: object = 1

    def coerce(self, x):
        raise NotImplementedError

    def is_unit(self, x) -> bool:
        raise NotImplementedError

    def inverse(self, x):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class RationalRing(Ring):
    name = "QQ"

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return normalize(x)
        if _is_scalar(x):
            return normalize(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def is_unit(self, x) -> bool:
        return x != 0

    def inverse(self, x):
        if x == 0:
            raise NotInvertibleError("zero has no inverse")
        return normalize(Fraction(1) / x)


class DualRing(Ring):
    name = "DD"

    def coerce(self, x):
        if isinstance(x, Dual):
            return x
        if _is_scalar(x):
            return Dual(x, 0)
        raise TypeError(f"cannot coerce {x!r} into DD")

    def is_unit(self, x) -> bool:
        return self.coerce(x).value != 0

    def inverse(self, x):
        return self.coerce(x).inverse()

    @property
    def zero(self):  # type: ignore[override]
        return Dual(0, 0)

    @property
    def one(self):  # type: ignore[override]
        return Dual(1, 0)


class ZLaurentRing(Ring):
    def __init__(self, base: Ring):
        if isinstance(base, ZLaurentRing):
            raise TypeError("nested z-Laurent rings are not supported")
        self.base = base
        self.name = f"ZL({base.name})"

    def coerce(self, x):
        if isinstance(x, ZLaurent):
            return ZLaurent({e: self.base.coerce(c) for e, c in x.terms.items()})
        return ZLaurent({0: self.base.coerce(x)})

    def is_unit(self, x) -> bool:
        return self.coerce(x).is_unit()

    def inverse(self, x):
        return self.coerce(x).inverse()

    @property
    def zero(self):  # type: ignore[override]
        return ZLaurent()

    @property
    def one(self):  # type: ignore[override]
        return ZLaurent({0: self.base.one})

    def __eq__(self, other):
        return isinstance(other, ZLaurentRing) and other.base == self.base

    def __hash__(self):
        return hash(("ZL", self.base.name))


QQ = RationalRing()
DD = DualRing()
ZQ = ZLaurentRing(QQ)
ZD = ZLaurentRing(DD)


def ZL(base: Ring) -> ZLaurentRing:
    return ZD if base is DD else ZQ if base is QQ else ZLaurentRing(base)


def common_ring(r1: Ring, r2: Ring) -> Ring:
    """Smallest ring of the four above containing both ``r1`` and ``r2``."""
    if r1 == r2:
        return r1
    has_z = isinstance(r1, ZLaurentRing) or isinstance(r2, ZLaurentRing)
    has_dual = DD in (r1, r2, getattr(r1, "base", None), getattr(r2, "base", None))
    if has_z:
        return ZD if has_dual else ZQ
    return DD if has_dual else QQ


def format_scalar(x) -> str:
    """Exact string form: ``"-3/5"``, ``"2"``, dual ``"1+2ε"``."""
    if isinstance(x, Dual):
        return f"{format_scalar(x.value)}+{format_scalar(x.deriv)}ε"
    if isinstance(x, ZLaurent):
        return str(x)
    x = normalize(Fraction(x)) if not isinstance(x, int) else x
    return str(x)

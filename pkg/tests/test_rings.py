from fractions import Fraction

import pytest

from qcrank.rings import DD, QQ, ZQ, Dual, NotInvertibleError, ZL, ZLaurent, common_ring, format_scalar, normalize


def test_normalize_collapses_integral_fractions():
    assert normalize(Fraction(4, 2)) == 2
    assert isinstance(normalize(Fraction(4, 2)), int)
    assert normalize(Fraction(1, 2)) == Fraction(1, 2)


def test_dual_product_rule():
    x = Dual(3, 1)
    assert x * x == Dual(9, 6)
    assert (x ** 3).deriv == 27


def test_dual_inverse_needs_nonzero_value():
    assert Dual(2, 1).inverse() * Dual(2, 1) == Dual(1, 0)
    with pytest.raises(ArithmeticError):
        Dual(0, 1).inverse()


def test_zlaurent_monomials_and_classes():
    z = ZLaurent.monomial(1, 1)
    s = z * z + ZLaurent.monomial(3, -1)
    assert s.coefficient(2) == 1
    assert s.class_sum(5, 4) == 3
    assert z.is_unit() and z.inverse() == ZLaurent.monomial(1, -1)
    assert not (z + 1).is_unit()
    with pytest.raises(ArithmeticError):
        (z + 1).inverse()


def test_common_ring_promotion():
    assert common_ring(QQ, DD) is DD
    assert common_ring(QQ, ZQ) == ZQ
    assert common_ring(DD, ZQ) == ZL(DD)


def test_format_scalar_is_exact():
    assert format_scalar(Fraction(-3, 5)) == "-3/5"
    assert format_scalar(Dual(1, Fraction(1, 2))) == "1+1/2ε"
    assert NotInvertibleError.__mro__[1] is ArithmeticError

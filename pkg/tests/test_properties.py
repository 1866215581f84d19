"""Randomized algebraic laws; each property runs at least 100 cases."""

from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qcrank import identities
from qcrank.lerch import BilateralSpec
from qcrank.rings import Dual
from qcrank.series import (
    QSeries,
    SeriesError,
    deriv_at_one,
    dilate,
    dissect,
    first_mismatch,
    invert,
    mul,
    one,
    sum_series,
    value_part,
)

CASES = settings(max_examples=150, deadline=None)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def series(draw, coef=rationals, lower=(-3, 3)):
    lo = draw(st.integers(*lower))
    n = draw(st.integers(1, 9))
    coefs = draw(st.lists(coef, min_size=n, max_size=n))
    return QSeries(coefs, lo, lo + n - 1)


duals = st.builds(Dual, rationals, rationals)


def same(a, b):
    return first_mismatch(a, b) is None


@CASES
@given(series(), series(), series())
def test_ring_laws(a, b, c):
    assert same(a + b, b + a)
    assert same(a * b, b * a)
    assert same((a + b) + c, a + (b + c))
    assert same((a * b) * c, a * (b * c))
    assert same(a * (b + c), a * b + a * c)
    assert same(a - a, a * 0)
    assert same(a * 1, a)


@CASES
@given(series(coef=duals), series(coef=duals))
def test_ring_laws_dual(a, b):
    assert same(a * b, b * a)
    assert same(a * (a + b), a * a + a * b)


@CASES
@given(series())
def test_inverse(s):
    assume(not s.is_zero())
    inv = invert(s)
    prod = mul(s, inv)
    assert prod.lower <= 0 <= prod.order or prod.order < 0
    assert same(prod, one(prod.order))
    # validity of the inverse is order - 2 * valuation
    assert inv.order == s.order - 2 * s.valuation()


@CASES
@given(series(), st.integers(1, 7))
def test_dissection_reassembly(s, m):
    parts = dissect(s, m)
    assert same(sum_series(parts, s.order), s)
    for r, p in enumerate(parts):
        assert all((e - r) % m == 0 for e, _ in p.items())


@CASES
@given(series(), st.integers(1, 4), st.integers(1, 4))
def test_dilation_composition(s, j, k):
    assert same(dilate(dilate(s, j), k), dilate(s, j * k))


@CASES
@given(series(), series(), st.integers(1, 4))
def test_dilation_is_multiplicative(a, b, k):
    assert same(dilate(a * b, k), dilate(a, k) * dilate(b, k))


@CASES
@given(series(coef=duals), series(coef=duals))
def test_dual_product_rule(f, g):
    lhs = deriv_at_one(f * g)
    rhs = deriv_at_one(f) * value_part(g) + value_part(f) * deriv_at_one(g)
    assert same(lhs, rhs)


@CASES
@given(st.integers(1, 60), st.integers(-60, 60), st.integers(-20, 20))
def test_bilateral_parity_invariant(A, B, C):
    if (A + B) % 2:
        try:
            BilateralSpec(A, B, C, 1, 1)
        except SeriesError:
            return
        raise AssertionError("odd A + B accepted")
    spec = BilateralSpec(A, B, C, 1, 1)
    for m in range(-50, 51):
        assert Fraction(A * m * m + B * m, 2).denominator == 1
        assert spec.exponent(m) == Fraction(A * m * m + B * m, 2) + C


def test_registry_specs_satisfy_parity():
    tables = [identities.THM45_A, identities.EQ16, identities.THM58_D, identities.EQ32]
    tables += [t for _, _, t in identities.EQ20_GROUPS.values()]
    tables += [t for _, _, t in identities.EQ36_GROUPS.values()]
    for terms in tables:
        for _, A, B, C, D, E, *primed in terms:
            spec = BilateralSpec(A, B, C, D, E, bool(primed))
            assert all(isinstance(spec.exponent(m), int) for m in range(-50, 51))

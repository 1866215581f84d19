"""The catalogue of identity checks.

Conventions used in the bilateral terms below: a tuple
``(w, A, B, C, D, E)`` stands for ``w * sum_m (-1)^m q^((A m^2 + B m)/2 + C)
/ (1 - q^(D m + E))``, and a trailing ``True`` omits ``m = 0``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .crank import X_VALUES, cor32_derivative, crank_gf, thm31_rhs
from .lerch import (
    BilateralSpec,
    appell_change_z,
    appell_m,
    bilateral_combination,
    build_master_lhs,
    lambert,
    master_numerator,
)
from .partitions import combination_series, p_count, stats
from .products import dilated, euler, named_product, qprod, qquot
from .rings import ZQ, Dual, ZLaurent
from .series import (
    QSeries,
    deriv_at_one,
    dissect,
    from_dict,
    invert,
    monomial,
    sum_series,
    z_class_extract,
    zero,
)
from .verify import ADJUDICATION, CORRECTION, IdentityCheck, congruent, vanishing


# ------------------------------------------------------------------ helpers
def q(e: int, order: int) -> QSeries:
    return monomial(1, e, order)


def bil(order: int, terms: Sequence[tuple]) -> QSeries:
    specs = []
    for w, A, B, C, D, E, *primed in terms:
        specs.append((w, BilateralSpec(A, B, C, D, E, bool(primed and primed[0]))))
    return bilateral_combination(specs, order)


def named(name: str, order: int) -> QSeries:
    return named_product(name, order)


def inv(name: str, order: int) -> QSeries:
    return invert(named_product(name, order))


def euler_sq(k: int, order: int) -> QSeries:
    """``(q^k; q^k)_inf ** 2``."""
    return dilated("euler", k, order) ** 2


def mono_sum(order: int, terms: Sequence[Tuple[int, int, QSeries]]) -> QSeries:
    """``sum c * q**e * s`` for ``(c, e, s)`` triples."""
    return sum_series([s.shift(e).scale(c).truncate(order) if e else s.scale(c) for c, e, s in terms], order)


W5 = {1: 1, 2: 2, 3: -2, 4: -1}
W7 = {1: 1, 2: 2, 3: 3, 4: -3, 5: -2, 6: -1}
NT5 = {1: 1, 4: -1, 2: 2, 3: -2}
NT7 = {1: 1, 6: -1, 2: 1, 5: -1, 3: -1, 4: 1}


# ------------------------------------------------------- partition oracles
def partition_series(order: int) -> QSeries:
    return from_dict({n: p_count(n) for n in range(order + 1)}, order)


def equidistribution(k: int, r: int):
    def build(order):
        lhs, rhs = {}, {}
        for n in range(r, order + 1, k):
            table = stats(n, k, "N")
            lhs[n] = ZLaurent({i: table[i] for i in range(k)})
            share = Fraction(p_count(n), k)
            rhs[n] = ZLaurent({i: share for i in range(k)})
        return from_dict(lhs, order, ZQ), from_dict(rhs, order, ZQ)

    return build


def beck(k: int, weights: Dict[int, int], which: str):
    return lambda order: combination_series(k, weights, which, order, start=1)


# ------------------------------------------------------------ crank family
@lru_cache(maxsize=8)
def _crank_gf_cached(x, order: int) -> QSeries:
    return crank_gf(x, order)


def thm31_lhs(order):
    return tuple(_crank_gf_cached(x, order) for x in X_VALUES)


def thm31_with_constant(order):
    return tuple(thm31_rhs(x, order) for x in X_VALUES)


def thm31_fixed(order):
    return tuple(thm31_rhs(x, order, constant=False) for x in X_VALUES)


def crank_classes(order):
    s = _crank_gf_cached(Dual.variable(1), order)
    return tuple(deriv_at_one(z_class_extract(s, k, b)) for k in (5, 7) for b in range(k))


def cor32_all(full: bool):
    return lambda order: tuple(cor32_derivative(k, b, order, full) for k in (5, 7) for b in range(k))


# ------------------------------------------------------------------ mod 5
def rhs_conj41(order):
    e25 = dilated("euler", 25, order)
    g5, h5 = dilated("G", 5, order), dilated("H", 5, order)
    return e25 * mono_sum(order, [(-1, 1, g5), (1, 2, h5), (1, 3, h5 * h5 * invert(g5))])


def rhs_mod25_split(order):
    e25 = dilated("euler", 25, order)
    g5, h5 = dilated("G", 5, order), dilated("H", 5, order)
    return e25 * mono_sum(order, [(1, 0, g5 * invert(h5)), (-1, 1, one_like(order)), (-1, 2, h5 * invert(g5))])


def one_like(order):
    return monomial(1, 0, order)


def e5(order, *parts):
    """``(q^5;q^5)^2`` times a product of named factors (``"G"``, ``"1/H"``...)."""
    s = euler_sq(5, order)
    for p in parts:
        s = s * (inv(p[2:], order) if p.startswith("1/") else named(p, order))
    return s


THM45_A = [(-1, 5, 1, -1, 5, 0, True), (1, 5, -1, -1, 5, -1), (2, 5, 3, -1, 5, 0, True), (2, 5, 7, 0, 5, 2)]
EQ16 = [(1, 1, 1, 0, 5, 0, True), (-2, 1, 3, 0, 5, 0, True)]

EQ20_GROUPS = {
    0: (1, 5, [(1, 25, 5, -5, 25, 0, True), (-1, 25, -5, -5, 25, -5), (-2, 25, 15, -5, 25, 0, True), (-2, 25, 35, 0, 25, 10)]),
    1: (1, 1, [(-1, 25, 15, 0, 25, 5), (1, 25, -15, 0, 25, -10)]),
    2: (2, 2, [(1, 25, 25, 0, 25, 5)]),
    3: (1, 3, [(1, 25, 25, 0, 25, 10)]),
    4: (2, 4, [(-1, 25, 5, -5, 25, -5), (1, 25, -5, -5, 25, -10)]),
}


def eq20_rhs(sign4: int):
    def build(order):
        out = []
        for r in range(5):
            w, e, terms = EQ20_GROUPS[r]
            if r == 4:
                w *= sign4
            out.append(bil(order - e, terms).scale(w).shift(e))
        return tuple(out)

    return build


def master_components(k: int):
    return lambda order: tuple(dissect(master_numerator(k, order), k))


def thm45_B(order):
    n = order + 2
    s = lambert(5, 2, 5, 1, n) - lambert(5, 5, 5, 4, n) - 3 * lambert(5, 3, 5, 2, n) + 3 * lambert(5, 4, 5, 3, n)
    return s.shift(-2)


def thm45_C(order):
    # the terms with m < 0 have a pole (m = -1) or diverge, so m runs over m >= 0
    return sum_series([c * lambert(i + 1, i, 5, 5, order) for i, c in enumerate((1, -3, 3, -1))], order)


# ------------------------------------------------------------------ mod 7
def rhs_lem53(order):
    e49 = dilated("euler", 49, order)
    L7, N7, Q7 = (dilated(x, 7, order) for x in "LNQ")
    body = mono_sum(order, [(1, 0, L7 * invert(N7)), (-1, 1, N7 * invert(Q7)), (-1, 2, one_like(order)),
                            (1, 5, Q7 * invert(L7))])
    return e49 * body


def conj51_products(order):
    A, B, C, D, E = (named(x, order) for x in "ABCDE")
    return mono_sum(order, [(-1, 1, A), (3, 2, B), (-2, 3, C), (1, 4, D), (-3, 6, E)])


def conj51_reading(b_term: str):
    def build(order):
        e49 = dilated("euler", 49, order)
        L7, N7, Q7 = (dilated(x, 7, order) for x in "LNQ")
        b = L7 * N7 * invert(Q7) if b_term == "display" else L7 * Q7 * invert(N7)
        return e49 * mono_sum(order, [(-1, 1, L7), (3, 2, b), (-2, 3, N7), (1, 4, Q7), (-3, 6, N7 * Q7 * invert(L7))])

    return build


def e7(order):
    return euler_sq(7, order)


def lnq(order):
    L, N, Q = (named(x, order) for x in "LNQ")
    return L, N, Q, invert(L), invert(N), invert(Q)


def rhs24(order):
    L, N, Q, iL, iN, iQ = lnq(order)
    return e7(order) * mono_sum(order, [(-1, 0, L * L * iN), (1, 1, Q * N * iL)])


def rhs25(order):
    L, N, Q, iL, iN, iQ = lnq(order)
    return e7(order) * mono_sum(order, [(1, 0, L * N * iQ), (3, 0, L * L * Q * iN * iN), (1, 1, Q * Q * iL)])


def rhs27(order):
    L, N, Q, iL, iN, iQ = lnq(order)
    return e7(order) * mono_sum(order, [(2, 0, N * N * iQ), (-2, 0, L * Q * iN), (-3, 1, Q * Q * N * iL * iL)])


def rhs30(order):
    L, N, Q, iL, iN, iQ = lnq(order)
    return (e7(order) * (Q * Q * iN + N * N * iL)).scale(3)


THM58_D = [(1, 7, 1, -1, 7, 0, True), (-1, 7, -1, -1, 7, -1), (-4, 7, 3, -1, 7, 0, True), (4, 7, -3, -1, 7, -3),
           (5, 7, 5, -1, 7, 0, True), (5, 7, 9, 0, 7, 2)]
EQ32 = [(1, 1, 1, 0, 7, 0, True), (-4, 1, 3, 0, 7, 0, True), (5, 1, 5, 0, 7, 0, True)]

EQ36_GROUPS = {
    0: (1, 0, [(1, 49, 7, 0, 49, 0, True), (-1, 49, -7, 0, 49, -7), (-4, 49, 21, 0, 49, 0, True),
               (4, 49, -21, 0, 49, -21), (5, 49, 35, 0, 49, 0, True), (5, 49, 63, 7, 49, 14)]),
    1: (1, 1, [(-1, 49, 21, 0, 49, 7), (1, 49, -21, 0, 49, -14)]),
    2: (4, 2, [(1, 49, 35, 0, 49, 7), (1, 49, 63, 7, 49, 21)]),
    3: (1, 3, [(1, 49, 35, 0, 49, 14), (-1, 49, -35, 0, 49, -21), (-5, 49, 49, 0, 49, 7)]),
    4: (5, 4, [(1, 49, 7, -7, 49, -14), (-1, 49, -7, -7, 49, -21)]),
    5: (1, 5, [(-4, 49, 49, 0, 49, 14), (-5, 49, 21, -7, 49, -7), (-5, 49, 77, 7, 49, 21)]),
    6: (1, 6, [(-1, 49, 49, 0, 49, 21), (4, 49, 7, -7, 49, -7), (-4, 49, -7, -7, 49, -14)]),
}


def eq36_rhs(order):
    return tuple(bil(order - e, terms).scale(w).shift(e) for w, e, terms in (EQ36_GROUPS[r] for r in range(7)))


def thm58_E(order):
    n = order + 2
    terms = [(1, 5, 4), (-1, 4, 3), (2, 2, 1), (-2, 7, 6), (3, 6, 5), (-3, 3, 2)]
    s = sum_series([lambert(7, b, 7, d, n).scale(c) for c, b, d in terms], n)
    return s.scale(3).shift(-2)


# (1 - y)^3 (2 y^2 + 3 y + 2) in y = q^(m+1)
THM58_F_POLY = (2, -3, -1, 1, 3, -2)


def thm58_F(order):
    return sum_series([lambert(i + 1, i, 7, 7, order).scale(3 * c) for i, c in enumerate(THM58_F_POLY)], order)


def lem55(i: int):
    return (lambda order: bil(order, [(1, 7, 7, 0, 7, i)]) * (1 - q(i, order)),
            lambda order: e7(order) * invert(qprod([7 - i, 7 + i], 7, order)))


def lem57(which: str):
    def lhs(order):
        L, N, Q, iL, iN, iQ = lnq(order)
        if which == "I":
            return mono_sum(order, [(-1, 0, L * L * iN), (1, 1, Q * N * iL)])
        if which == "II":
            return mono_sum(order, [(1, 0, L * N * iQ), (1, 1, Q * Q * iL)])
        return N * N * iQ - L * Q * iN

    def rhs(order):
        L, N, Q, iL, iN, iQ = lnq(order)
        if which == "I":
            return -(L * N * N * iQ * iQ)
        if which == "II":
            return L * L * Q * iN * iN
        return (Q * Q * N * iL * iL).shift(1).scale(-1).truncate(order)

    return lhs, rhs


def eq43_lhs(order):
    p = lambda *e: qprod(list(e), 7, order)
    return mono_sum(order, [(1, 0, p(3, 4, 3, 4, 3, 4, 1, 6)), (-1, 0, p(2, 5, 2, 5, 2, 5, 3, 4)),
                            (1, 1, p(1, 6, 1, 6, 1, 6, 2, 5))])


# --------------------------------------------------------------- Appell-Lerch
APPELL_5 = ((2, 5, -4, -1), (1, 5, -2, -3))
APPELL_7 = ((3, 7, -6, -1), (3, 7, -2, -5), (2, 7, 1, -1), (1, 7, 2, -2))

# theta-quotient forms of m(z1) - m(z0): (sign, shift, numerator, denominator, modulus)
APPELL_PRODUCTS = {
    (2, 5, -4, -1): (1, 0, (2, 3, 5), (1, 1, 1, 4, 4, 4), 5),
    (1, 5, -2, -3): (1, 1, (1, 4, 5), (2, 2, 2, 3, 3, 3), 5),
    (3, 7, -6, -1): (1, 0, (7,), (1, 6, 1, 6), 7),
    (3, 7, -2, -5): (-1, 0, (3, 3, 4, 4, 7), (1, 6, 2, 5, 2, 5, 2, 5), 7),
    (2, 7, 1, -1): (1, 0, (2, 5, 2, 5, 7), (1, 6, 1, 6, 1, 6, 3, 4), 7),
}


def appell_differences(tuples):
    return lambda order: tuple(appell_m(a, M, b1, order) - appell_m(a, M, b0, order) for a, M, b0, b1 in tuples)


def appell_transfers(tuples):
    return lambda order: tuple(appell_change_z(a, M, b0, b1, order) for a, M, b0, b1 in tuples)


def appell_product_forms(tuples):
    def build(order):
        out = []
        for t in tuples:
            sign, shift, num, den, M = APPELL_PRODUCTS[t]
            out.append(qquot(num, den, M, order + shift).shift(shift).truncate(order).scale(sign))
        return tuple(out)

    return build


def zero_series(order):
    return zero(order)


# ------------------------------------------------------------------ registry
def registry() -> List[IdentityCheck]:
    C = IdentityCheck
    out: List[IdentityCheck] = []
    add = out.append

    # partitions
    for k, r in ((5, 4), (7, 5), (11, 6)):
        add(C(f"ramanujan_{k}", f"p({k}n+{r}) is divisible by {k}", f"p({k}n+{r}) = 0 mod {k}",
              partition_series, mode=vanishing(k, r), order=60, tags=("partitions",)))
    for k, r in ((5, 4), (7, 5)):
        lhs, rhs = _split(equidistribution(k, r))
        add(C(f"asd_{k}", f"every rank class mod {k} holds p({k}n+{r})/{k} partitions of {k}n+{r}",
              f"N(i,{k},{k}n+{r}) = p({k}n+{r})/{k}", lhs, rhs, order=40, tags=("partitions",)))
    add(C("beck_thm11", "weighted parts-by-rank alternating sum mod 5 at 5n+1, 5n+4",
          "NT(1)-NT(4)+2NT(2)-2NT(3) at 5n+i, i=1,4", beck(5, NT5, "NT"),
          mode=vanishing(5, (1, 4)), min_exp=1, order=45, tags=("partitions", "beck")))
    add(C("beck_thm12", "weighted parts-by-rank alternating sum mod 7 at 7n+1, 7n+5",
          "NT(1)-NT(6)+NT(2)-NT(5)-NT(3)+NT(4) at 7n+i, i=1,5", beck(7, NT7, "NT"),
          mode=vanishing(7, (1, 5)), min_exp=1, order=45, tags=("partitions", "beck")))
    add(C("beck_thm13", "weighted ones-by-crank alternating sum mod 5 at 5n+4",
          "M(1)+2M(2)-2M(3)-M(4) at 5n+4", beck(5, W5, "M_omega"),
          mode=vanishing(5, 4), min_exp=1, order=45, tags=("partitions", "beck")))
    add(C("beck_thm14", "weighted ones-by-crank alternating sum mod 7 at 7n+5",
          "M(1)+2M(2)+3M(3)-3M(4)-2M(5)-M(6) at 7n+5", beck(7, W7, "M_omega"),
          mode=vanishing(7, 5), min_exp=1, order=45, tags=("partitions", "beck")))

    # crank generating function
    add(C("thm31", "crank generating function equals its decomposed form (bracket with leading 1)",
          "(xq)_inf/(zq,xq/z)_inf = [1 + sum_{n>=1} ...]/(q)_inf, x in {1+eps, 2, 1/2}",
          thm31_lhs, thm31_with_constant, order=30, tags=("crank",)))
    add(C("thm31_corrected", "crank generating function equals its decomposed form without the leading 1",
          "(xq)_inf/(zq,xq/z)_inf = [sum_{n>=1} ...]/(q)_inf, x in {1+eps, 2, 1/2}",
          thm31_lhs, thm31_fixed, order=30, tags=("crank",), role=CORRECTION))
    for k in (5, 7):
        for b in range(1, k):
            add(C(f"cor32_k{k}_b{b}", f"enumerated ones-by-crank tally in class {b} mod {k} vs d/dx of its decomposed series",
                  f"sum M(b={b},k={k},n) q^n = d/dx|1 [(q;q)_(n-1) form]",
                  _stats_builder(k, b), _cor32_builder(k, b), min_exp=2, order=25, tags=("crank", "oracle")))
    add(C("cor32_gf", "crank-class extraction of the crank generating function vs the (q;q)_(n-1) form, all classes mod 5 and 7",
          "d/dx|1 [z^(b mod k)] (xq)_inf/(zq,xq/z)_inf = d/dx|1 [(q;q)_(n-1) form]",
          crank_classes, cor32_all(False), order=25, tags=("crank",), role=ADJUDICATION, group="cor32_form"))
    add(C("cor32_variant", "crank-class extraction vs the (q;q)_n form, all classes mod 5 and 7",
          "d/dx|1 [z^(b mod k)] (xq)_inf/(zq,xq/z)_inf = d/dx|1 [(q;q)_n form]",
          crank_classes, cor32_all(True), order=25, tags=("crank",), role=ADJUDICATION, group="cor32_form"))
    add(C("cor33", "weighted crank tally mod 5 vs the mod-5 master series",
          "sum [M(1)+2M(2)-2M(3)-M(4)] q^n = master_5 (mod 5)",
          beck(5, W5, "M_omega"), lambda n: build_master_lhs(5, n), mode=congruent(5), min_exp=2, order=40,
          tags=("crank", "oracle")))
    add(C("cor34", "weighted crank tally mod 7 vs the mod-7 master series",
          "sum [M(1)+2M(2)+3M(3)-3M(4)-2M(5)-M(6)] q^n = master_7 (mod 7)",
          beck(7, W7, "M_omega"), lambda n: build_master_lhs(7, n), mode=congruent(7), min_exp=2, order=40,
          tags=("crank", "oracle")))

    # mod 5
    M5 = ("mod5",)
    add(C("conj41", "mod-5 master series as three dilated Rogers-Ramanujan products",
          "master_5 = (q^25;q^25)[-q G(q^5) + q^2 H(q^5) + q^3 H^2/G(q^5)]",
          lambda n: build_master_lhs(5, n), rhs_conj41, order=60, tags=M5 + ("headline",), unproven=True))
    add(C("conj41_vanishing", "mod-5 master series has no exponents = 4 (mod 5) after reduction",
          "[q^(5n+4)] master_5 = 0 mod 5", lambda n: build_master_lhs(5, n), mode=vanishing(5, 4),
          order=60, tags=M5, unproven=True))
    add(C("mod25_split", "Euler product split into residue classes mod 5",
          "(q;q) = (q^25;q^25)[G/H(q^5) - q - q^2 H/G(q^5)]", euler, rhs_mod25_split,
          order=80, tags=M5 + ("products",)))
    add(C("eq10", "difference of two mod-5 Lerch sums equals (q^5;q^5)^2 G^2/H",
          "S(5,3,0,5,1) - S(5,-3,0,5,-2) = E5^2 G^2/H",
          lambda n: bil(n, [(1, 5, 3, 0, 5, 1), (-1, 5, -3, 0, 5, -2)]), lambda n: e5(n, "G", "G", "1/H"),
          order=60, tags=M5 + ("lerch",)))
    add(C("eq11", "mod-5 Lerch sum with denominator exponent 5m+1 equals (q^5;q^5)^2 G",
          "S(5,5,0,5,1) = E5^2 G", lambda n: bil(n, [(1, 5, 5, 0, 5, 1)]), lambda n: e5(n, "G"),
          order=60, tags=M5 + ("lerch",)))
    add(C("eq12", "mod-5 Lerch sum with denominator exponent 5m+2 equals (q^5;q^5)^2 H",
          "S(5,5,0,5,2) = E5^2 H", lambda n: bil(n, [(1, 5, 5, 0, 5, 2)]), lambda n: e5(n, "H"),
          order=60, tags=M5 + ("lerch",)))
    add(C("eq13", "difference of two mod-5 Lerch sums equals (q^5;q^5)^2 H^2/G",
          "S(5,1,-1,5,-1) - S(5,-1,-1,5,-2) = E5^2 H^2/G",
          lambda n: bil(n, [(1, 5, 1, -1, 5, -1), (-1, 5, -1, -1, 5, -2)]), lambda n: e5(n, "H", "H", "1/G"),
          order=60, tags=M5 + ("lerch",)))
    add(C("eq13_corrected", "same difference taken in the opposite order",
          "S(5,-1,-1,5,-2) - S(5,1,-1,5,-1) = E5^2 H^2/G",
          lambda n: bil(n, [(-1, 5, 1, -1, 5, -1), (1, 5, -1, -1, 5, -2)]), lambda n: e5(n, "H", "H", "1/G"),
          order=60, tags=M5 + ("lerch",), role=CORRECTION))
    add(C("eq14", "four mod-5 Lerch sums (two primed) equal (q^5;q^5)^2 H^3/G^2",
          "-S'(5,1,-1,5,0) + S(5,-1,-1,5,-1) + 2S'(5,3,-1,5,0) + 2S(5,7,0,5,2) = E5^2 H^3/G^2",
          lambda n: bil(n, THM45_A), lambda n: e5(n, "H", "H", "H", "1/G", "1/G"),
          order=60, tags=M5 + ("lerch", "headline"), unproven=True))
    add(C("eq16_bilateral", "mod-5 master numerator as two primed bilateral sums",
          "sum_{n>=1} (-1)^n q^(n(n+1)/2)(1-q^n)^3(1+q^n)/(1-q^5n) = S'(1,1,0,5,0) - 2S'(1,3,0,5,0)",
          lambda n: master_numerator(5, n), lambda n: bil(n, EQ16), order=60, tags=M5 + ("lerch",)))
    add(C("eq20_dissection", "5-dissection of the mod-5 master numerator into bilateral groups, residue-4 group with weight +2",
          "component r of the numerator = q^r [group r], r = 0..4",
          master_components(5), eq20_rhs(1), order=60, tags=M5 + ("lerch",)))
    add(C("eq20_dissection_corrected", "same 5-dissection with the residue-4 group weighted -2",
          "component r of the numerator = q^r [group r], group 4 negated",
          master_components(5), eq20_rhs(-1), order=60, tags=M5 + ("lerch",), role=CORRECTION))
    add(C("thm45_AB", "Lerch-sum form of the open mod-5 identity equals its Lambert-series form",
          "-S'(5,1,-1,5,0) + ... = q^-2 sum_j [q^(5j+2)/(1-q^(5j+1)) - ...]",
          lambda n: bil(n, THM45_A), thm45_B, order=60, tags=M5 + ("lerch",)))
    add(C("thm45_BC", "Lambert-series form equals the single-sum form (summed over m >= 0)",
          "q^-2 sum_j [...] = sum_{m>=0} q^m (1-q^(m+1))^3/(1-q^(5m+5))",
          thm45_B, thm45_C, order=60, tags=M5 + ("lerch",)))
    add(C("thm45_A_rhs", "single-sum form of the open mod-5 identity against its product side",
          "sum_{m>=0} q^m (1-q^(m+1))^3/(1-q^(5m+5)) = E5^2 H^3/G^2",
          thm45_C, lambda n: e5(n, "H", "H", "H", "1/G", "1/G"), order=60, tags=M5 + ("lerch",), unproven=True))
    add(C("appell_xfer_5", "m(x,q,z1) - m(x,q,z0) from Lerch sums vs the theta quotient, base q^5",
          "(a,M,b0,b1) in {(2,5,-4,-1), (1,5,-2,-3)}",
          appell_differences(APPELL_5), appell_transfers(APPELL_5), order=50, tags=M5 + ("appell",)))
    add(C("appell_prod_5", "theta-quotient transfers written as explicit q-products, base q^5",
          "(q^2,q^3,q^5;q^5)/(q,q,q,q^4,q^4,q^4;q^5) and its companion",
          appell_transfers(APPELL_5), appell_product_forms(APPELL_5), order=50, tags=M5 + ("appell",)))

    # mod 7
    M7 = ("mod7",)
    add(C("lem53", "Euler product split into residue classes mod 7",
          "(q;q) = (q^49;q^49)[L/N(q^7) - q N/Q(q^7) - q^2 + q^5 Q/L(q^7)]", euler, rhs_lem53,
          order=80, tags=M7 + ("products",)))
    add(C("conj51", "mod-7 master series as five mod-49 quotients",
          "master_7 = -qA + 3q^2 B - 2q^3 C + q^4 D - 3q^6 E",
          lambda n: build_master_lhs(7, n), conj51_products, order=60, tags=M7 + ("headline",), unproven=True))
    add(C("conj51_reading_display", "mod-7 master series with B read as L N/Q (q^7)",
          "B = L(q^7) N(q^7)/Q(q^7)", lambda n: build_master_lhs(7, n), conj51_reading("display"),
          order=60, tags=M7, unproven=True, role=ADJUDICATION, group="conj51_b_term"))
    add(C("conj51_reading_remark", "mod-7 master series with B read as L Q/N (q^7)",
          "B = L(q^7) Q(q^7)/N(q^7)", lambda n: build_master_lhs(7, n), conj51_reading("remark"),
          order=60, tags=M7, unproven=True, role=ADJUDICATION, group="conj51_b_term"))
    add(C("conj51_vanishing", "mod-7 master series has no exponents = 5 (mod 7) after reduction",
          "[q^(7n+5)] master_7 = 0 mod 7", lambda n: build_master_lhs(7, n), mode=vanishing(7, 5),
          order=60, tags=M7, unproven=True))
    mod7_eqs = [
        ("eq24", [(-1, 7, 3, 0, 7, 1), (1, 7, -3, 0, 7, -2)], rhs24, "= E7^2 (-L^2/N + q Q N/L)"),
        ("eq25", [(4, 7, 5, 0, 7, 1), (4, 7, 9, 1, 7, 3)], rhs25, "= E7^2 (L N/Q + 3 L^2 Q/N^2 + q Q^2/L)"),
        ("eq26", [(1, 7, 5, 0, 7, 2), (-1, 7, -5, 0, 7, -3), (-5, 7, 7, 0, 7, 1)],
         lambda n: (e7(n) * named("L", n)).scale(-4), "= -4 E7^2 L"),
        ("eq27", [(5, 7, 1, -1, 7, -2), (-5, 7, -1, -1, 7, -3)], rhs27, "= E7^2 (2N^2/Q - 2LQ/N - 3q Q^2 N/L^2)"),
        ("eq28", [(-4, 7, 7, 0, 7, 2), (-5, 7, 3, -1, 7, -1), (-5, 7, 11, 1, 7, 3)],
         lambda n: e7(n) * named("N", n), "= E7^2 N"),
        ("eq29", [(-1, 7, 7, 0, 7, 3), (4, 7, 1, -1, 7, -1), (-4, 7, -1, -1, 7, -2)],
         lambda n: (e7(n) * named("Q", n)).scale(-5), "= -5 E7^2 Q"),
        ("eq30", THM58_D, rhs30, "= 3 E7^2 (Q^2/N + N^2/L)"),
    ]
    for cid, terms, rhs, anchor in mod7_eqs:
        add(C(cid, f"mod-7 Lerch-sum combination {anchor.lstrip('= ')}", _spec_text(terms) + " " + anchor,
              _bil_builder(terms), rhs, order=60, tags=M7 + ("lerch",) + (("headline",) if cid == "eq30" else ()),
              unproven=cid == "eq30"))
    add(C("eq32_bilateral", "mod-7 master numerator as three primed bilateral sums",
          "sum_{n>=1} (-1)^n q^(n(n+1)/2)(1-q^n)^5(1+q^n)/(1-q^7n) = S'(1,1,0,7,0) - 4S'(1,3,0,7,0) + 5S'(1,5,0,7,0)",
          lambda n: master_numerator(7, n), lambda n: bil(n, EQ32), order=60, tags=M7 + ("lerch",)))
    add(C("eq36_dissection", "7-dissection of the mod-7 master numerator into bilateral groups",
          "component r of the numerator = q^r [group r], r = 0..6",
          master_components(7), eq36_rhs, order=60, tags=M7 + ("lerch",)))
    for i in (1, 2, 3):
        lhs, rhs = lem55(i)
        add(C(f"lem55_i{i}", f"(1-q^{i}) times a mod-7 Lerch sum is a theta quotient",
              f"(1-q^{i}) S(7,7,0,7,{i}) = E7^2/(q^{7 - i},q^{7 + i};q^7)", lhs, rhs,
              order=80, tags=M7 + ("products", "lerch")))
    for which in ("I", "II", "III"):
        lhs, rhs = lem57(which)
        anchors = {"I": "-L^2/N + q QN/L = -L N^2/Q^2", "II": "LN/Q + q Q^2/L = L^2 Q/N^2",
                   "III": "N^2/Q - LQ/N = -q Q^2 N/L^2"}
        add(C(f"lem57_{which}", f"mod-7 product identity {anchors[which]}", anchors[which], lhs, rhs,
              order=80, tags=M7 + ("products",)))
    add(C("eq43", "three-term theta product relation mod 7 vanishes",
          "(q^3,q^4)^3(q,q^6) - (q^2,q^5)^3(q^3,q^4) + q (q,q^6)^3(q^2,q^5) = 0 on base q^7",
          eq43_lhs, zero_series, order=80, tags=M7 + ("products",)))
    add(C("thm58_DE", "Lerch-sum form of the open mod-7 identity equals its Lambert-series form",
          "S'(7,1,-1,7,0) - ... = 3 q^-2 sum_j [...]", _bil_builder(THM58_D), thm58_E, order=60, tags=M7 + ("lerch",)))
    add(C("thm58_EF", "Lambert-series form equals the single-sum form (summed over m >= 0)",
          "3 q^-2 sum_j [...] = 3 sum_{m>=0} q^m (1-q^(m+1))^3 (2q^(2m+2)+3q^(m+1)+2)/(1-q^(7m+7))",
          thm58_E, thm58_F, order=60, tags=M7 + ("lerch",)))
    add(C("thm58_D_rhs", "single-sum form of the open mod-7 identity against its product side",
          "3 sum_{m>=0} ... = 3 E7^2 (Q^2/N + N^2/L)", thm58_F, rhs30, order=60, tags=M7 + ("lerch",), unproven=True))
    add(C("appell_xfer_7", "m(x,q,z1) - m(x,q,z0) from Lerch sums vs the theta quotient, base q^7",
          "(a,M,b0,b1) in {(3,7,-6,-1), (3,7,-2,-5), (2,7,1,-1), (1,7,2,-2)}",
          appell_differences(APPELL_7), appell_transfers(APPELL_7), order=50, tags=M7 + ("appell",)))
    add(C("appell_prod_7", "theta-quotient transfers written as explicit q-products, base q^7",
          "(q^7;q^7)/(q,q^6,q,q^6;q^7) and companions",
          appell_transfers(APPELL_7[:3]), appell_product_forms(APPELL_7[:3]), order=50, tags=M7 + ("appell",)))
    return out


def _split(build):
    cache = {}

    def side(i):
        def f(order):
            if order not in cache:
                cache[order] = build(order)
            return cache[order][i]

        return f

    return side(0), side(1)


def _stats_builder(k, b):
    from .partitions import series_from_stats

    return lambda order: series_from_stats(k, b, "M_omega", order)


def _cor32_builder(k, b):
    return lambda order: cor32_derivative(k, b, order)


def _bil_builder(terms):
    return lambda order: bil(order, terms)


def _spec_text(terms) -> str:
    parts = []
    for w, A, B, C, D, E, *primed in terms:
        s = "S'" if primed and primed[0] else "S"
        parts.append(f"{w:+d}{s}({A},{B},{C},{D},{E})")
    return " ".join(parts)

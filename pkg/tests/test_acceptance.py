"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Checks known to fail as stated are not relaxed here; they fail, and the
line says where.
"""

import random
import time
from fractions import Fraction

import pytest

from qcrank.crank import cor32_derivative
from qcrank.partitions import ENUMERATION_CUTOFF, enumerate_partitions, p_count, p_pentagonal, series_from_stats
from qcrank.series import QSeries, first_mismatch, mul
from qcrank.verify import adjudication_summary, format_report, run_suite, select

import test_properties as props


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {n:>2}] {'PASS' if ok else 'FAIL'}: {detail}")
        return ok

    return emit


def failures(reports):
    return [format_report(r) for r in reports if not r.passed]


def summary(reports):
    bad = failures(reports)
    return f"{len(reports) - len(bad)}/{len(reports)} checks" + ("" if not bad else "; " + " | ".join(bad))


def test_criterion_01_combinatorial_base(verdict):
    t0 = time.perf_counter()
    p4 = sum(1 for _ in enumerate_partitions(4))
    agree = all(p_count(n) == p_pentagonal(n) for n in range(ENUMERATION_CUTOFF + 1))
    reports = run_suite(["ramanujan_5", "ramanujan_7", "ramanujan_11"], order=60)
    elapsed = time.perf_counter() - t0
    ok = p4 == 5 and agree and all(r.passed for r in reports) and elapsed < 5
    assert verdict(1, ok, f"p(4)={p4}, enumeration=pentagonal to 30: {agree}, {summary(reports)}, {elapsed:.2f}s")


def test_criterion_02_rank_equidistribution(verdict):
    reports = run_suite(["asd_5", "asd_7"], order=40)
    assert verdict(2, all(r.passed for r in reports), summary(reports))


def test_criterion_03_beck_congruences(verdict):
    t0 = time.perf_counter()
    reports = run_suite([f"beck_thm1{i}" for i in range(1, 5)], order=45)
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in reports) and elapsed < 60
    assert verdict(3, ok, f"{summary(reports)}, {elapsed:.2f}s")


def test_criterion_04_oracle_vs_derivative_series(verdict):
    ids = [f"cor32_k5_b{b}" for b in range(1, 5)] + [f"cor32_k7_b{b}" for b in range(1, 7)]
    reports = run_suite(ids, order=25, min_exp=2)
    # n = 1 is reported, never compared; the gf's stray -x at q^1 sits in class 0
    n1 = []
    symmetric = True
    for k in (5, 7):
        oracle = [series_from_stats(k, b, "M_omega", 25) for b in range(k)]
        series = [cor32_derivative(k, b, 25) for b in range(k)]
        n1 += [f"k={k},b={b}: {oracle[b][1]} vs {series[b][1]}" for b in range(k) if oracle[b][1] != series[b][1]]
        diff = [o - s for o, s in zip(oracle, series)]
        symmetric &= all(first_mismatch(diff[b], diff[k - b], 2) is None for b in range(1, k))
    ok = all(r.passed for r in reports)
    assert verdict(4, ok, f"{summary(reports)}; n=1 (not compared): {'; '.join(n1) or 'agrees'}; "
                          f"oracle-minus-series equal in classes b and k-b: {symmetric}")


def test_criterion_05_weighted_crank_congruences(verdict):
    reports = run_suite(["cor33", "cor34"], order=40, min_exp=2)
    assert verdict(5, all(r.passed for r in reports), summary(reports))


def test_criterion_06_trivariate_decomposition(verdict):
    (r,) = run_suite(["thm31"], order=30)
    assert verdict(6, r.passed, format_report(r))


def test_criterion_07_lerch_equalities(verdict):
    ids = [f"eq{i}" for i in range(10, 15)] + [f"eq{i}" for i in range(24, 31)]
    reports = run_suite(ids, order=60)
    headline = {r.id: r.passed for r in reports if r.id in ("eq14", "eq30")}
    ok = all(r.passed for r in reports)
    assert verdict(7, ok, f"{summary(reports)}; unproven eq14/eq30 passed: {headline}")


def test_criterion_08_master_series_identities(verdict):
    claims = run_suite(["conj41", "conj41_vanishing", "conj51", "conj51_vanishing"], order=60)
    readings = run_suite(["conj51_reading_display", "conj51_reading_remark"], order=60)
    verified = adjudication_summary(readings)["conj51_b_term"]
    ok = all(r.passed for r in claims) and bool(verified)
    assert verdict(8, ok, f"{summary(claims)}; B-term readings verified: {verified or 'none'}")


def test_criterion_09_equivalent_statements(verdict):
    reports = run_suite(["thm45_AB", "thm45_BC", "thm58_DE", "thm58_EF"], order=60)
    (ab,) = select("thm45_AB")
    (bc,) = select("thm45_BC")
    (de,) = select("thm58_DE")
    (ef,) = select("thm58_EF")
    ac = first_mismatch(ab.lhs(60), bc.rhs(60)) is None
    df = first_mismatch(de.lhs(60), ef.rhs(60)) is None
    ok = all(r.passed for r in reports) and ac and df
    assert verdict(9, ok, f"{summary(reports)}; A=C: {ac}; D=F: {df}")


def test_criterion_10_product_identities(verdict):
    ids = ["lem53", "mod25_split", "lem55_i1", "lem55_i2", "lem55_i3", "lem57_I", "lem57_II", "lem57_III", "eq43"]
    reports = run_suite(ids, order=80)
    assert verdict(10, all(r.passed for r in reports), summary(reports))


def test_criterion_11_appell_lerch(verdict):
    reports = run_suite(["appell_xfer_5", "appell_xfer_7", "appell_prod_5", "appell_prod_7"], order=50)
    assert verdict(11, all(r.passed for r in reports), summary(reports))


def test_criterion_12_property_suites(verdict):
    laws = [props.test_ring_laws, props.test_ring_laws_dual, props.test_inverse, props.test_dissection_reassembly,
            props.test_dilation_composition, props.test_dilation_is_multiplicative, props.test_dual_product_rule,
            props.test_bilateral_parity_invariant]
    assert props.CASES.max_examples >= 100
    failed = []
    for law in laws:
        try:
            law()
        except Exception as exc:  # report every law, not just the first failure
            failed.append(f"{law.__name__}: {type(exc).__name__}")
    props.test_registry_specs_satisfy_parity()
    ok = not failed
    assert verdict(12, ok, f"{len(laws) - len(failed)}/{len(laws)} laws x {props.CASES.max_examples} cases"
                           + (f"; failed: {failed}" if failed else ""))


def test_criterion_13_performance(verdict):
    t0 = time.perf_counter()
    reports = run_suite(jobs=1)
    full = time.perf_counter() - t0
    rng = random.Random(200)
    a = QSeries([Fraction(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(201)], 0, 200)
    b = QSeries([Fraction(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(201)], 0, 200)
    t1 = time.perf_counter()
    c = mul(a, b)
    product = time.perf_counter() - t1
    ok = full < 120 and product < 10 and c.order == 200
    assert verdict(13, ok, f"full registry ({len(reports)} checks, serial) {full:.1f}s; order-200 rational product {product:.2f}s")

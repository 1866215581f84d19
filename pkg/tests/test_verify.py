import json

import pytest

from qcrank.identities import e5
from qcrank.lerch import BilateralSpec, eval_bilateral
from qcrank.series import monomial
from qcrank.verify import (
    ADJUDICATION,
    CORRECTION,
    IdentityCheck,
    IdentityReport,
    UsageError,
    adjudication_summary,
    congruent,
    overall_passed,
    registry,
    reports_from_json,
    reports_to_json,
    run_check,
    run_suite,
    select,
    vanishing,
)


def eq11_lhs(order):
    return eval_bilateral(BilateralSpec(5, 5, 0, 5, 1), order)


def eq11_rhs(order):
    return e5(order, "G")


def test_eq11_passes():
    r = run_check(IdentityCheck("eq11", "", "", eq11_lhs, eq11_rhs, order=60))
    assert r.passed and r.effective_order == 60 and r.first_mismatch is None


def test_eq11_mutation_fails_at_exponent_one():
    wrong = IdentityCheck("eq11_wrong", "", "", eq11_lhs, lambda n: eq11_rhs(n) * (1 + monomial(1, 1, n)))
    r = run_check(wrong, order=60)
    assert not r.passed
    assert r.first_mismatch[0] == 1


def test_self_comparison_passes():
    r = run_check(IdentityCheck("self", "", "", eq11_lhs, eq11_lhs), order=20)
    assert r.passed


def test_builder_errors_become_failed_reports():
    bad = IdentityCheck("pole", "", "", lambda n: eval_bilateral(BilateralSpec(1, 1, 0, 5, 0), n), eq11_lhs)
    r = run_check(bad, order=10)
    assert not r.passed and "PoleError" in r.error


def test_modes():
    three = lambda n: monomial(3, 2, n)
    assert run_check(IdentityCheck("c", "", "", three, lambda n: monomial(-2, 2, n), mode=congruent(5)), 5).passed
    assert not run_check(IdentityCheck("c", "", "", three, lambda n: monomial(1, 2, n), mode=congruent(5)), 5).passed
    assert run_check(IdentityCheck("v", "", "", three, mode=vanishing(5, 4)), 10).passed
    r = run_check(IdentityCheck("v", "", "", three, mode=vanishing(5, 2)), 10)
    assert not r.passed and r.first_mismatch[0] == 2
    assert run_check(IdentityCheck("v", "", "", lambda n: monomial(5, 2, n), mode=vanishing(5, 2)), 10).passed


def test_min_exp_skips_early_terms():
    lhs = lambda n: monomial(1, 1, n)
    rhs = lambda n: monomial(2, 1, n)
    assert not run_check(IdentityCheck("m", "", "", lhs, rhs), 5).passed
    assert run_check(IdentityCheck("m", "", "", lhs, rhs, min_exp=2), 5).passed


def test_registry_contents():
    checks = registry()
    ids = [c.id for c in checks]
    assert len(ids) >= 45 and len(ids) == len(set(ids))
    required = ["ramanujan_5", "ramanujan_7", "ramanujan_11", "asd_5", "asd_7", "thm31", "cor33", "cor34",
                "conj41", "eq16_bilateral", "eq20_dissection", "lem53", "conj51", "conj51_reading_display",
                "conj51_reading_remark", "eq36_dissection", "eq43", "appell_xfer_5", "appell_xfer_7"]
    required += [f"beck_thm1{i}" for i in range(1, 5)] + [f"eq{i}" for i in range(10, 15)]
    required += [f"eq{i}" for i in range(24, 31)] + [f"lem55_i{i}" for i in (1, 2, 3)]
    required += [f"lem57_{w}" for w in ("I", "II", "III")] + [f"cor32_k5_b{b}" for b in range(1, 5)]
    required += [f"cor32_k7_b{b}" for b in range(1, 7)]
    required += ["thm45_AB", "thm45_BC", "thm45_A_rhs", "thm58_DE", "thm58_EF", "thm58_D_rhs"]
    assert not set(required) - set(ids)
    assert {c.id for c in checks if c.unproven} >= {"eq14", "eq30", "conj41", "conj51"}


def test_select():
    assert [c.id for c in select("eq11")] == ["eq11"]
    assert all("mod5" in c.tags for c in select("mod5"))
    assert select([]) == []
    assert run_suite([]) == []
    with pytest.raises(UsageError):
        select("nosuch")
    with pytest.raises(UsageError):
        select(["eq11", "nosuch"])


def test_suite_order_and_parallel_agree():
    ids = ["eq12", "eq11", "lem55_i1", "ramanujan_5"]
    serial = run_suite(ids, order=30, jobs=1)
    parallel = run_suite(ids, order=30, jobs=3)
    order = [c.id for c in registry() if c.id in ids]
    assert [r.id for r in serial] == order == [r.id for r in parallel]
    strip = lambda rs: [{**r.to_dict(), "runtime_ms": 0} for r in rs]
    assert strip(serial) == strip(parallel)


def test_determinism():
    a = run_suite("mod7", order=30)
    b = run_suite("mod7", order=30)
    strip = lambda rs: [{**r.to_dict(), "runtime_ms": 0} for r in rs]
    assert strip(a) == strip(b)


@pytest.mark.parametrize("cid", ["eq10", "eq25", "conj41", "lem57_II", "appell_xfer_5", "cor33"])
def test_monotonicity(cid):
    (check,) = select(cid)
    assert run_check(check).passed
    for n in (5, 12, 25):
        assert run_check(check, order=n).passed


def test_json_round_trip():
    reports = run_suite(["eq13", "eq11"], order=20)
    back = reports_from_json(reports_to_json(reports))
    assert back == reports
    data = json.loads(reports_to_json(reports))
    (mm,) = [d["first_mismatch"] for d in data if d["id"] == "eq13"]
    assert isinstance(mm["lhs"], str) and mm["exponent"] == 0


def test_overall_pass_semantics():
    r = lambda i, ok, role="claim", g=None: IdentityReport(i, ok, 10, role=role, group=g)
    assert overall_passed([r("a", True), r("b", False, ADJUDICATION, "g"), r("c", True, ADJUDICATION, "g")])
    assert not overall_passed([r("b", False, ADJUDICATION, "g"), r("c", False, ADJUDICATION, "g")])
    assert not overall_passed([r("a", True), r("d", False, CORRECTION)])
    assert adjudication_summary([r("b", False, ADJUDICATION, "g"), r("c", True, ADJUDICATION, "g")]) == {"g": ["c"]}


def test_order_must_be_positive():
    with pytest.raises(UsageError):
        run_check(select("eq11")[0], order=0)
    with pytest.raises(UsageError):
        run_suite("eq11", order=0)

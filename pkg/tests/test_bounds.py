import json
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ramanujan_primes import CoverageError, DomainError, UsageError, build_table, compute_ramanujan
from ramanujan_primes import bounds
from ramanujan_primes.report import FAIL, INDETERMINATE, PASS, classify_less


def _mp_threshold(n):
    f = lambda x: (x / 6 - 3 * mpmath.sqrt(x)) / mpmath.log(x) - n
    with mpmath.workdps(40):
        return mpmath.findroot(f, 400 + 60 * n)


def test_lower_bound_values():
    assert bounds.ramanujan_lower_bound(324) == 0
    v = bounds.ramanujan_lower_bound(10**6)
    assert 36960 > v
    assert v == pytest.approx((10**6 / 6 - 3000) / math.log(10**6))
    with pytest.raises(DomainError):
        bounds.ramanujan_lower_bound(300)


def test_threshold_against_high_precision_root():
    x1 = bounds.solve_lower_bound_threshold(1)
    assert abs(x1 - 392.39) < 0.01
    assert abs(x1 - float(_mp_threshold(1))) < 1e-6
    x2 = bounds.solve_lower_bound_threshold(2)
    assert x2 > x1
    assert abs(x2 - float(_mp_threshold(2))) < 1e-6
    assert abs(bounds.ramanujan_lower_bound(x2) - 2) < 1e-6


@settings(max_examples=50, deadline=None)
@given(n=st.integers(1, 5000))
def test_threshold_is_a_right_inverse(n):
    assert abs(bounds.ramanujan_lower_bound(bounds.solve_lower_bound_threshold(n)) - n) < 1e-6


def test_integer_bound_on_r2():
    assert bounds.ramanujan_bound_for_index(2) == 392
    rt = compute_ramanujan(60)
    for n in range(2, 61):
        assert rt[n] <= bounds.ramanujan_bound_for_index(n)
    with pytest.raises(UsageError):
        bounds.ramanujan_bound_for_index(1)


def test_threshold_rejects_small_n():
    with pytest.raises(UsageError):
        bounds.solve_lower_bound_threshold(0)


def test_sandwich_small_cases():
    assert 2 * math.log(2) < 2 < 4 * math.log(4)
    assert 8 * math.log(8) == pytest.approx(16.635, abs=0.005)
    rep = bounds.check_sandwich_bounds(compute_ramanujan(2))
    assert rep.passed and rep.samples_checked == 2


def test_sandwich_sweep():
    rep = bounds.check_sandwich_bounds(compute_ramanujan(1000))
    assert rep.passed and rep.samples_checked == 1000 and rep.indeterminate == 0


def test_interval_at_p3n(table_1e6):
    t = table_1e6
    assert t.pi(5) - t.pi(2) == 2 > 1
    rep = bounds.check_interval_at_p3n(2180)
    assert rep.passed and rep.samples_checked == 2180
    rep = bounds.check_interval_at_p3n(10**4, t)
    assert rep.passed and rep.notes["n_checked_below_2181"] == 2180


def test_below_p3n(rt_10k, table_1e6):
    assert bounds.check_below_p3n(compute_ramanujan(1)).passed
    assert bounds.check_below_p3n(compute_ramanujan(1000)).passed
    assert bounds.check_below_p3n(rt_10k, table_1e6).passed


def test_coverage_errors():
    small = build_table(1000)
    rt = compute_ramanujan(100)
    # the scan table reaches p_3N, but never p_4N
    with pytest.raises(CoverageError):
        bounds.check_sandwich_bounds(compute_ramanujan(1000), small)
    with pytest.raises(CoverageError):
        bounds.check_interval_at_p3n(1000, small)
    with pytest.raises(CoverageError):
        bounds.check_pi_upper(small, 114, 2000)
    with pytest.raises(CoverageError):
        bounds.inequality_suite(small, 5000)
    assert bounds.check_sandwich_bounds(rt).passed


def test_ratio_series(rt_500, rt_10k):
    pts = bounds.ratio_series(rt_500)
    assert round(pts[499].r, 3) == 1.115
    assert pts[499].r == 8831 / 7919
    assert pts[0].r == 2 / 3
    big = bounds.ratio_series(rt_10k)
    assert all(p.r > 1 for p in big[1:])
    trend = bounds.ratio_trend(big)
    assert trend["closer_to_one"]


def test_pnt_epsilon(table_1e6):
    assert bounds.pnt_epsilon(table_1e6, 10**6) == pytest.approx(36960 * math.log(10**6) / 10**6 - 0.5)
    assert abs(bounds.pnt_epsilon(table_1e6, 10**6) - 0.0106) < 1e-4
    assert -0.5 < bounds.pnt_epsilon(table_1e6, 10**4) < 0.5
    with pytest.raises(UsageError):
        bounds.pnt_epsilon(table_1e6, 2)


def test_suite_small_examples(table_1e6):
    t = table_1e6
    assert t.pi(22) == 8 < 2 * t.pi(11) == 10
    assert 1 * math.log(1) == 0 < t.nth_prime(1)
    reps = bounds.inequality_suite(t, 10**4)
    assert [r.check_id for r in reps] == [
        "rosser_nth_prime", "pi_doubling", "bertrand_interval_3_5", "calculus_y",
        "pi_upper_5_4", "nth_prime_upper", "half_pi_chain", "erdos", "eq1",
    ]
    assert all(r.passed for r in reps)
    # below 2^16 + 1 the chain has nothing to check
    chain = reps[6]
    assert chain.samples_checked == 0 and chain.notes["quoted_threshold"] == 2**24


def test_half_integers_included(table_1e6):
    rep = bounds.check_bertrand_interval_lower(table_1e6, 20.5, 30)
    assert rep.samples_checked == 20  # 20.5, 21, ..., 30


def test_failures_are_minimal_and_reproducible(table_1e6):
    # pi(2x) < 2 pi(x) needs x >= 11; below that it fails
    rep = bounds.check_pi_doubling(table_1e6, 2, 100)
    assert not rep.passed and rep.status == "fail"
    brute = [x for x in range(2, 101) if not table_1e6.pi(2 * x) < 2 * table_1e6.pi(x)]
    assert rep.first_failure == brute[0]
    again = bounds.check_pi_doubling(table_1e6, rep.first_failure, rep.first_failure)
    assert again.first_failure == rep.first_failure

    # the 5/4 bound fails somewhere below 113.6
    rep = bounds.check_pi_upper(table_1e6, 2, 200)
    brute = [x for x in range(2, 201) if not table_1e6.pi(x) < 1.25 * x / math.log(x)]
    assert rep.first_failure == brute[0]
    assert max(brute) < 113.6

    # k ln(k ln k) is not an upper bound for tiny k
    rep = bounds.check_nth_prime_upper(table_1e6, 10, k_lo=2)
    assert not rep.passed


def test_indeterminate_band():
    eps = np.finfo(float).eps
    lhs = np.array([1.0, 1.0, 1.0, 1.0])
    rhs = np.array([2.0, 1.0 + eps, 1.0 - eps, 0.5])
    assert classify_less(lhs, rhs).tolist() == [PASS, INDETERMINATE, INDETERMINATE, FAIL]


def test_report_serialisation(table_1e6):
    rep = bounds.check_pi_doubling(table_1e6, 2, 100)
    d = json.loads(json.dumps(rep.to_dict()))
    assert d["check_id"] == "pi_doubling" and d["passed"] is False
    assert d["first_failure"] == rep.first_failure
    assert rep.to_line().startswith("pi_doubling FAIL range=[2,100] samples=99 ")
    ok = bounds.check_pi_doubling(table_1e6, 11, 100)
    assert ok.passed and ok.first_failure is None


@pytest.mark.slow
def test_full_suite_at_one_million(table_1e6):
    for rep in bounds.inequality_suite(table_1e6, 10**6):
        assert rep.passed and rep.indeterminate == 0, rep.to_line()

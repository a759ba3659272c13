import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ramanujan_primes import (
    RangeError,
    ResourceError,
    UsageError,
    brute_force_ramanujan,
    build_table,
    compute_ramanujan,
    is_ramanujan,
    s_value,
    scan_bound_for,
)
from ramanujan_primes.ramanujan import ramanujan_count_covering, s_series


def test_s_value_examples(table_1e6):
    assert s_value(table_1e6, 10) == 1
    assert s_value(table_1e6, 2) == 1
    assert s_value(table_1e6, 10**6) == 36960
    with pytest.raises(RangeError):
        s_value(build_table(50), 51)


def test_s_series_matches_two_lookups(table_1e6):
    s = s_series(table_1e6)
    x = np.arange(table_1e6.limit + 1)
    np.testing.assert_array_equal(s, table_1e6.pi_prefix[x] - table_1e6.pi_prefix[x // 2])


def test_chunked_scan_matches_whole_array():
    # 3e6 spans several 2^20 chunks in both the running sum and the suffix minimum
    t = build_table(3_000_000)
    x = np.arange(t.limit + 1)
    s = t.pi_prefix[x] - t.pi_prefix[x // 2]
    np.testing.assert_array_equal(s_series(t), s)
    n = 60_000
    bound = scan_bound_for(n)
    assert bound > 2 * (1 << 20)
    floor = np.minimum.accumulate(s[: bound + 1][::-1])[::-1]
    expected = np.searchsorted(floor, np.arange(1, n + 1))
    np.testing.assert_array_equal(compute_ramanujan(n, table=t).values, expected)


def test_scan_respects_memory_budget():
    with pytest.raises(ResourceError):
        compute_ramanujan(10**4, memory_budget=10**6)
    compute_ramanujan(10**4, memory_budget=None)


def test_s_steps_by_at_most_one(table_1e6):
    assert np.abs(np.diff(s_series(table_1e6)[2:].astype(np.int64))).max() <= 1


def test_scan_bound():
    assert scan_bound_for(1) == 11
    assert scan_bound_for(2) == 17
    # high-precision evaluation of ceil(4N ln 4N)
    assert scan_bound_for(500) == int(mpmath.ceil(2000 * mpmath.log(2000))) == 15202
    with pytest.raises(UsageError):
        scan_bound_for(0)


def test_compute_examples(rt_500):
    assert compute_ramanujan(5).values.tolist() == [2, 11, 17, 29, 41]
    assert compute_ramanujan(1).values.tolist() == [2]
    assert rt_500[500] == 8831
    assert rt_500.index_of(500) == 1100


def test_compute_reuses_a_large_table(table_1e6):
    rt = compute_ramanujan(100, table=table_1e6)
    assert rt.table is table_1e6
    assert rt.values.tolist() == compute_ramanujan(100).values.tolist()


def test_is_ramanujan(rt_500):
    assert is_ramanujan(rt_500, 149) and is_ramanujan(rt_500, 151)
    assert not is_ramanujan(rt_500, 191) and not is_ramanujan(rt_500, 193)
    assert is_ramanujan(rt_500, 2)
    assert not is_ramanujan(rt_500, 1)
    with pytest.raises(RangeError):
        is_ramanujan(rt_500, 8832)


def test_brute_force_examples():
    assert brute_force_ramanujan(2, 400) == 11
    assert brute_force_ramanujan(1, 100) == 2
    with pytest.raises(UsageError):
        brute_force_ramanujan(2, 16)


def test_oracle_equivalence_up_to_50():
    rt = compute_ramanujan(50)
    for n in range(1, 51):
        assert brute_force_ramanujan(n, scan_bound_for(n)) == rt[n]


def test_oracle_is_insensitive_to_horizon():
    # any horizon past the proven bound gives the same answer
    assert brute_force_ramanujan(10, 5000) == brute_force_ramanujan(10, scan_bound_for(10)) == 97


def test_table_invariants(rt_10k):
    rt, t = rt_10k, rt_10k.table
    v = rt.values
    assert np.all(t.primality[v])
    assert np.all(np.diff(v) > 0)
    n = np.arange(1, rt.count + 1)
    s = t.pi_prefix[v].astype(np.int64) - t.pi_prefix[v // 2]
    s_before = t.pi_prefix[v - 1].astype(np.int64) - t.pi_prefix[(v - 1) // 2]
    np.testing.assert_array_equal(s, n)
    np.testing.assert_array_equal(s_before, n - 1)
    np.testing.assert_array_equal(t.primes[rt.prime_index - 1], v)
    assert rt.scan_bound == scan_bound_for(rt.count)


def test_sandwich_by_prime_index(rt_10k):
    big = build_table(500_000)
    n = np.arange(2, rt_10k.count + 1)
    r = rt_10k.values[1:]
    assert np.all(big.primes[2 * n - 1] < r)
    assert np.all(r < big.primes[4 * n - 1])


def test_values_beyond_bound_keep_the_count(rt_10k):
    # nothing past the scan bound may drop below N: check on a wider window
    t = build_table(2 * rt_10k.scan_bound)
    s = s_series(t)
    assert s[rt_10k.largest:].min() >= rt_10k.count


@settings(max_examples=30, deadline=None)
@given(n=st.integers(1, 400))
def test_prefix_consistency(n):
    # computing fewer terms never changes the ones computed
    big = compute_ramanujan(400)
    assert compute_ramanujan(n).values.tolist() == big.values[:n].tolist()


def test_count_covering(table_1e6):
    for x in (2, 100, 8831, 10**5):
        n = ramanujan_count_covering(table_1e6, x)
        assert compute_ramanujan(n)[n] >= x


def test_known_prefix():
    head = [2, 11, 17, 29, 41, 47, 59, 67, 71, 97, 101, 107, 127, 149, 151, 167, 179, 181, 227, 229]
    assert compute_ramanujan(20).values.tolist() == head


def test_index_errors(rt_500):
    with pytest.raises(RangeError):
        rt_500[0]
    with pytest.raises(RangeError):
        rt_500[501]


def test_natural_log_convention():
    assert 2 * math.log(2) < 2 < 4 * math.log(4)
    # R_2 = 11 < 8 ln 8; in base 10 the upper bound would already fail
    assert 11 < 8 * math.log(8)
    assert not 11 < 8 * math.log10(8)

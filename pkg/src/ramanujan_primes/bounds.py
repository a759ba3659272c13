"""Numerical sweeps of explicit prime bounds around Ramanujan primes.

Every check returns a :class:`~ramanujan_primes.report.CheckReport` naming the
smallest input that did not pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy.optimize import bisect

from .errors import CoverageError, DomainError, RangeError, UsageError
from .primes import DEFAULT_MEMORY_BUDGET, PrimeTable, build_table, limit_for_nth_prime
from .ramanujan import RamanujanTable, s_value
from .report import CheckReport, PASS, classify_less, classify_less_exact, combine, make_report

__all__ = [
    "CheckReport",
    "RatioPoint",
    "check_below_p3n",
    "check_bertrand_interval_lower",
    "check_calculus_inequality",
    "check_erdos_bound",
    "check_half_pi_chain",
    "check_interval_at_p3n",
    "check_nth_prime_upper",
    "check_pi_doubling",
    "check_pi_upper",
    "check_ramanujan_lower_bound",
    "check_rosser_nth_prime",
    "check_sandwich_bounds",
    "inequality_suite",
    "pnt_epsilon",
    "ramanujan_bound_for_index",
    "ramanujan_lower_bound",
    "ratio_series",
    "ratio_trend",
    "solve_lower_bound_threshold",
    "table_with_primes",
]

def _require_limit(table: PrimeTable, x: int, what: str) -> None:
    if x > table.limit:
        raise CoverageError(f"{what} needs a prime table up to {x}, have {table.limit}")


def table_with_primes(
    k: int,
    *candidates: PrimeTable | None,
    memory_budget: int | None = DEFAULT_MEMORY_BUDGET,
    build: bool = True,
) -> PrimeTable:
    """A table holding at least ``k`` primes, reusing a candidate when possible."""
    for t in candidates:
        if t is not None and t.count >= k:
            return t
    if not build:
        raise CoverageError(f"need the first {k} primes, no table supplied holds them")
    return build_table(limit_for_nth_prime(k), memory_budget=memory_budget)


# -- Ramanujan's lower bound for pi(x) - pi(x/2) ---------------------------


def ramanujan_lower_bound(x: float) -> float:
    """(x/6 - 3 sqrt(x)) / ln x, asserted as a lower bound on s(x) for x > 300."""
    if not x > 300:
        raise DomainError(f"the bound is only asserted for x > 300, got {x}")
    return (x / 6 - 3 * math.sqrt(x)) / math.log(x)


def solve_lower_bound_threshold(n: float, xtol: float = 1e-6) -> float:
    """The x > 324 at which the lower bound equals ``n``, by bisection.

    The bound is zero at x = 324 and strictly increasing beyond it.
    """
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    lo, hi = 324.0, 648.0
    while ramanujan_lower_bound(hi) < n:
        lo, hi = hi, 2 * hi
    return bisect(lambda x: ramanujan_lower_bound(x) - n, lo, hi, xtol=xtol, rtol=4 * float(np.finfo(np.float64).eps))


def ramanujan_bound_for_index(n: int) -> int:
    """Integer upper bound on R_n (n >= 2) implied by the lower bound alone.

    For x at or beyond the threshold where the bound reaches n - 1, s(x) > n - 1,
    so s(x) >= n. s(x) is constant on [m, m + 1) for integer m, so the
    threshold can be rounded down.
    """
    if n < 2:
        raise UsageError(f"n must be >= 2, got {n}")
    return math.floor(solve_lower_bound_threshold(n - 1))


def check_ramanujan_lower_bound(table: PrimeTable, lo: int = 301, hi: int | None = None) -> CheckReport:
    hi = table.limit if hi is None else hi
    lo = max(lo, 301)
    _require_limit(table, hi, "ramanujan_lower_bound")
    x = np.arange(lo, hi + 1, dtype=np.int64)
    s = table.pi_prefix[x] - table.pi_prefix[x // 2]
    xf = x.astype(np.float64)
    bound = (xf / 6 - 3 * np.sqrt(xf)) / np.log(xf)
    return make_report("eq1", lo, hi, x, classify_less(bound, s), statement="s(x) > (x/6 - 3 sqrt x)/ln x, x > 300")


# -- bounds sandwiching R_n --------------------------------------------------


def check_sandwich_bounds(
    rt: RamanujanTable,
    table: PrimeTable | None = None,
    *,
    memory_budget: int | None = DEFAULT_MEMORY_BUDGET,
) -> CheckReport:
    """2n ln 2n < R_n < 4n ln 4n for all n <= N, and p_2n < R_n < p_4n for 1 < n <= N."""
    big_n = rt.count
    table = table_with_primes(4 * big_n, table, rt.table, memory_budget=memory_budget, build=table is None)
    n = np.arange(1, big_n + 1, dtype=np.int64)
    nf = n.astype(np.float64)
    r = rt.values
    status = combine(
        classify_less(2 * nf * np.log(2 * nf), r),
        classify_less(r, 4 * nf * np.log(4 * nf)),
    )
    p2n = table.primes[2 * n - 1]
    p4n = table.primes[4 * n - 1]
    primes_ok = combine(classify_less_exact(p2n, r), classify_less_exact(r, p4n))
    primes_ok[0] = PASS  # n = 1: R_1 = p_1 sits below p_2, the prime pair is only claimed for n > 1
    return make_report("theorem2", 1, big_n, n, combine(status, primes_ok), statement="2n ln 2n < R_n < 4n ln 4n; p_2n < R_n < p_4n (n > 1)")


def check_interval_at_p3n(
    n_max: int,
    table: PrimeTable | None = None,
    *,
    memory_budget: int | None = DEFAULT_MEMORY_BUDGET,
) -> CheckReport:
    """s(p_3n) > n for 1 <= n <= n_max."""
    if n_max < 1:
        raise UsageError(f"n_max must be >= 1, got {n_max}")
    table = table_with_primes(3 * n_max, table, memory_budget=memory_budget, build=table is None)
    n = np.arange(1, n_max + 1, dtype=np.int64)
    p3n = table.primes[3 * n - 1]
    s = table.pi_prefix[p3n] - table.pi_prefix[p3n // 2]
    below = int(min(n_max, 2180))
    return make_report(
        "theorem4", 1, n_max, n, classify_less_exact(n, s),
        statement="pi(p_3n) - pi(p_3n / 2) > n", n_checked_below_2181=below,
    )


def check_below_p3n(
    rt: RamanujanTable,
    table: PrimeTable | None = None,
    *,
    memory_budget: int | None = DEFAULT_MEMORY_BUDGET,
) -> CheckReport:
    """R_n < p_3n for all n <= N."""
    table = table_with_primes(3 * rt.count, table, rt.table, memory_budget=memory_budget, build=table is None)
    n = np.arange(1, rt.count + 1, dtype=np.int64)
    return make_report("conjecture1", 1, rt.count, n, classify_less_exact(rt.values, table.primes[3 * n - 1]), statement="R_n < p_3n")


# -- R_n / p_2n and the prime number theorem --------------------------------


@dataclass(frozen=True)
class RatioPoint:
    n: int
    r: float

    @property
    def epsilon(self) -> float:
        return self.r - 1.0


def ratio_series(
    rt: RamanujanTable,
    table: PrimeTable | None = None,
    *,
    memory_budget: int | None = DEFAULT_MEMORY_BUDGET,
) -> list[RatioPoint]:
    """R_n / p_2n for n = 1..N."""
    table = table_with_primes(2 * rt.count, table, rt.table, memory_budget=memory_budget, build=table is None)
    n = np.arange(1, rt.count + 1)
    r = rt.values / table.primes[2 * n - 1]
    return [RatioPoint(int(k), float(v)) for k, v in zip(n, r)]


def ratio_trend(points: list[RatioPoint], window: tuple[int, int] = (5000, 10000), reference: int = 500) -> dict[str, Any]:
    """Compare max |r_n - 1| over ``window`` with |r_reference - 1|.

    This is a monitored observation: the ratio tends to 1 only asymptotically,
    so a False here is reported, not raised.
    """
    by_n = {p.n: p for p in points}
    lo, hi = window
    if reference not in by_n or hi not in by_n:
        raise RangeError(f"ratio series must reach n={max(reference, hi)}", available=len(points))
    worst = max(abs(by_n[k].epsilon) for k in range(lo, hi + 1))
    ref = abs(by_n[reference].epsilon)
    return {"window": [lo, hi], "window_max_abs_epsilon": worst, "reference_n": reference, "reference_abs_epsilon": ref, "closer_to_one": worst < ref}


def pnt_epsilon(table: PrimeTable, x: int) -> float:
    """s(x) ln(x) / x - 1/2."""
    if x < 3:
        raise UsageError(f"x must be >= 3, got {x}")
    return s_value(table, x) * math.log(x) / x - 0.5


# -- explicit Chebyshev-type inequalities -----------------------------------


def check_rosser_nth_prime(table: PrimeTable, k_max: int | None = None) -> CheckReport:
    """k ln k < p_k for 1 <= k <= k_max."""
    k_max = table.count if k_max is None else k_max
    if k_max > table.count:
        raise CoverageError(f"need {k_max} primes, table has {table.count}")
    k = np.arange(1, k_max + 1, dtype=np.int64)
    kf = k.astype(np.float64)
    return make_report("rosser_nth_prime", 1, k_max, k, classify_less(kf * np.log(kf), table.primes[:k_max]), statement="k ln k < p_k")


def check_pi_doubling(table: PrimeTable, lo: int = 11, hi: int | None = None) -> CheckReport:
    """pi(2x) < 2 pi(x) for integers lo <= x <= hi."""
    hi = table.limit // 2 if hi is None else hi
    _require_limit(table, 2 * hi, "pi_doubling")
    x = np.arange(lo, hi + 1, dtype=np.int64)
    return make_report("pi_doubling", lo, hi, x, classify_less_exact(table.pi_prefix[2 * x], 2 * table.pi_prefix[x].astype(np.int64)), statement="pi(2x) < 2 pi(x), x >= 11")


def check_bertrand_interval_lower(table: PrimeTable, lo: float = 20.5, hi: float | None = None) -> CheckReport:
    """pi(2x) - pi(x) > (3/5) x / ln x over integers and half-integers in [lo, hi]."""
    hi = table.limit / 2 if hi is None else hi
    twice = np.arange(math.ceil(2 * lo), math.floor(2 * hi) + 1, dtype=np.int64)
    _require_limit(table, int(twice[-1]) if twice.size else 0, "bertrand_interval_lower")
    count = table.pi_prefix[twice] - table.pi_prefix[twice // 2]
    x = twice / 2.0
    return make_report(
        "bertrand_interval_3_5", lo, hi, x, classify_less(0.6 * x / np.log(x), count),
        statement="pi(2x) - pi(x) > (3/5) x/ln x, x >= 20.5", grid="integers and half-integers",
    )


def check_calculus_inequality(y_lo: float = 4.0, y_hi: float = 1e6, step: float = 0.25) -> CheckReport:
    """2y ln 4y / ln(2y ln 4y) > (5/3) y on a uniform grid."""
    y = y_lo + step * np.arange(int(round((y_hi - y_lo) / step)) + 1, dtype=np.float64)
    top = 2 * y * np.log(4 * y)
    return make_report(
        "calculus_y", y_lo, y_hi, y, classify_less(5.0 / 3.0 * y, top / np.log(top)),
        statement="2y ln 4y / ln(2y ln 4y) > (5/3) y, y >= 4", step=step,
    )


def check_pi_upper(table: PrimeTable, lo: int = 114, hi: int | None = None) -> CheckReport:
    """pi(x) < (5/4) x / ln x for integers lo <= x <= hi."""
    hi = table.limit if hi is None else hi
    _require_limit(table, hi, "pi_upper")
    x = np.arange(lo, hi + 1, dtype=np.int64)
    xf = x.astype(np.float64)
    return make_report("pi_upper_5_4", lo, hi, x, classify_less(table.pi_prefix[x], 1.25 * xf / np.log(xf)), statement="pi(x) < (5/4) x/ln x, x >= 113.6")


def check_nth_prime_upper(table: PrimeTable, k_max: int | None = None, k_lo: int = 6) -> CheckReport:
    """p_k < k ln(k ln k) for k_lo <= k <= k_max."""
    k_max = table.count if k_max is None else k_max
    if k_max > table.count:
        raise CoverageError(f"need {k_max} primes, table has {table.count}")
    k = np.arange(k_lo, k_max + 1, dtype=np.int64)
    kf = k.astype(np.float64)
    return make_report("nth_prime_upper", k_lo, k_max, k, classify_less(table.primes[k - 1], kf * np.log(kf * np.log(kf))), statement="p_k < k ln(k ln k), k >= 6")


def check_half_pi_chain(table: PrimeTable, lo: int = 2**16 + 1, hi: int | None = None) -> CheckReport:
    """pi(x/2) < (2/3) x / ln x for integers lo <= x <= hi.

    The chain behind this bound needs ln(x/2) > (15/16) ln x, i.e. x > 2^16;
    the bound is usually quoted from 2^24, and both thresholds are noted.
    """
    hi = table.limit if hi is None else hi
    _require_limit(table, hi, "half_pi_chain")
    x = np.arange(lo, hi + 1, dtype=np.int64)
    xf = x.astype(np.float64)
    return make_report(
        "half_pi_chain", lo, hi, x, classify_less(table.pi_prefix[x // 2], 2.0 / 3.0 * xf / np.log(xf)),
        statement="pi(x/2) < (2/3) x/ln x", derivation_threshold=2**16, quoted_threshold=2**24,
        reaches_quoted_range=bool(hi > 2**24),
    )


def check_erdos_bound(table: PrimeTable, lo: int = 8000, hi: int | None = None) -> CheckReport:
    """s(x) > (ln 2 / 60) x / ln x for integers lo <= x <= hi."""
    hi = table.limit if hi is None else hi
    _require_limit(table, hi, "erdos")
    x = np.arange(lo, hi + 1, dtype=np.int64)
    xf = x.astype(np.float64)
    s = table.pi_prefix[x] - table.pi_prefix[x // 2]
    return make_report("erdos", lo, hi, x, classify_less(math.log(2) / 60 * xf / np.log(xf), s), statement="s(x) > (ln 2/60) x/ln x, x >= 8000")


def inequality_suite(table: PrimeTable, xmax: int | None = None) -> list[CheckReport]:
    """All explicit inequalities swept up to ``xmax`` (default: the table limit)."""
    xmax = table.limit if xmax is None else xmax
    _require_limit(table, xmax, "inequality_suite")
    k_max = table.pi(xmax)
    return [
        check_rosser_nth_prime(table, k_max),
        check_pi_doubling(table, 11, xmax // 2),
        check_bertrand_interval_lower(table, 20.5, xmax / 2),
        check_calculus_inequality(),
        check_pi_upper(table, 114, xmax),
        check_nth_prime_upper(table, k_max),
        check_half_pi_chain(table, 2**16 + 1, xmax),
        check_erdos_bound(table, 8000, xmax),
        check_ramanujan_lower_bound(table, 301, xmax),
    ]

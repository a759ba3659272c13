"""Ramanujan primes R_1..R_N.

``s(x) = pi(x) - pi(x // 2)`` counts primes in ``(x/2, x]``. R_n is the
smallest integer such that ``s(x) >= n`` for every ``x >= R_n``. Since
``R_n < 4n ln(4n)``, scanning ``s`` up to that bound finds every R_n with
n <= N.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

import numpy as np

from .errors import RangeError, ResourceError, UsageError
from .primes import DEFAULT_MEMORY_BUDGET, PrimeTable, build_table, estimate_table_bytes

__all__ = [
    "RamanujanTable",
    "brute_force_ramanujan",
    "compute_ramanujan",
    "is_ramanujan",
    "ramanujan_count_covering",
    "s_series",
    "s_value",
    "scan_bound_for",
]


@dataclass(frozen=True, eq=False)
class RamanujanTable:
    """R_1..R_N together with their positions among all primes.

    ``values[n - 1]`` is R_n and ``prime_index[n - 1]`` is k with R_n = p_k.
    ``table`` is the prime table the scan ran over (``table.limit >= scan_bound``).
    """

    count: int
    values: np.ndarray
    prime_index: np.ndarray
    scan_bound: int
    table: PrimeTable

    def __getitem__(self, n: int) -> int:
        """R_n, 1-based."""
        n = operator.index(n)
        if not 1 <= n <= self.count:
            raise RangeError(f"n={n} outside [1, {self.count}]", available=self.count)
        return int(self.values[n - 1])

    def index_of(self, n: int) -> int:
        """k such that R_n = p_k."""
        self[n]
        return int(self.prime_index[n - 1])

    @property
    def largest(self) -> int:
        return int(self.values[-1])

    def is_ramanujan(self, p: int) -> bool:
        return is_ramanujan(self, p)


def s_value(table: PrimeTable, x: int) -> int:
    """pi(x) - pi(floor(x/2))."""
    x = operator.index(x)
    if x < 0:
        raise UsageError(f"x must be >= 0, got {x}")
    if x > table.limit:
        raise RangeError(f"x={x} exceeds table limit {table.limit}", available=table.limit)
    return int(table.pi_prefix[x]) - int(table.pi_prefix[x // 2])


def s_series(table: PrimeTable, upto: int | None = None) -> np.ndarray:
    """s(x) for x = 0..upto, built from the step recurrence.

    Going from x-1 to x, pi(x) gains one when x is prime and pi(x // 2)
    gains one when x is even and x/2 is prime, so
    ``s(x) = s(x-1) + [x prime] - [x even and x/2 prime]``.
    """
    upto = table.limit if upto is None else upto
    if upto > table.limit:
        raise RangeError(f"upto={upto} exceeds table limit {table.limit}", available=table.limit)
    flags = table.primality
    out = np.empty(upto + 1, dtype=table.pi_prefix.dtype)
    carry = 0
    for lo in range(0, upto + 1, _SCAN_CHUNK):
        hi = min(lo + _SCAN_CHUNK, upto + 1)
        step = flags[lo:hi].astype(np.int8)
        even = lo + (lo & 1)
        step[even - lo :: 2] -= flags[even // 2 : (hi - 1) // 2 + 1]
        seg = out[lo:hi]
        np.cumsum(step, dtype=seg.dtype, out=seg)
        seg += carry
        carry = int(seg[-1])
    return out


_SCAN_CHUNK = 1 << 20


def estimate_scan_bytes(bound: int, n: int = 0) -> int:
    """Working memory of the s(x) scan on top of the prime table."""
    # one running-sum array reused for the suffix minimum, chunk temporaries,
    # and the two int64 result arrays
    return 4 * (bound + 1) + 8 * _SCAN_CHUNK + 16 * n


def scan_bound_for(n: int) -> int:
    """max(11, ceil(4n ln 4n)); every R_k with k <= n lies below it."""
    n = operator.index(n)
    if n < 1:
        raise UsageError(f"N must be >= 1, got {n}")
    return max(11, math.ceil(4 * n * math.log(4 * n)))


def _suffix_minimum_inplace(a: np.ndarray) -> None:
    # one backward pass, chunked so no full-size temporary is allocated
    carry = None
    for hi in range(a.size, 0, -_SCAN_CHUNK):
        lo = max(0, hi - _SCAN_CHUNK)
        chunk = np.minimum.accumulate(a[lo:hi][::-1])
        if carry is not None:
            np.minimum(chunk, carry, out=chunk)
        a[lo:hi] = chunk[::-1]
        carry = chunk[-1]


def compute_ramanujan(
    n: int,
    *,
    table: PrimeTable | None = None,
    memory_budget: int | None = DEFAULT_MEMORY_BUDGET,
) -> RamanujanTable:
    """R_1..R_n from one pass over s(x), x <= scan_bound_for(n).

    An existing ``table`` is reused when it reaches the scan bound.
    """
    bound = scan_bound_for(n)
    if memory_budget is not None:
        required = estimate_scan_bytes(bound, n)
        if table is None or table.limit < bound:
            required += estimate_table_bytes(bound)
        if required > memory_budget:
            raise ResourceError(
                f"computing R_1..R_{n} scans to {bound} and needs ~{required} bytes, budget is {memory_budget}",
                required=required,
                budget=memory_budget,
            )
    if table is None or table.limit < bound:
        table = build_table(bound, memory_budget=None)
    floor = s_series(table, bound)
    _suffix_minimum_inplace(floor)
    # floor[x] = min(s(y) for x <= y <= bound) is nondecreasing; R_k is the first x reaching k
    values = np.searchsorted(floor, np.arange(1, n + 1, dtype=floor.dtype), side="left").astype(np.int64)
    prime_index = table.pi_prefix[values].astype(np.int64)
    for arr in (values, prime_index):
        arr.flags.writeable = False
    return RamanujanTable(
        count=n, values=values, prime_index=prime_index, scan_bound=bound, table=table
    )


def is_ramanujan(rt: RamanujanTable, p: int) -> bool:
    """Membership in R_1..R_N; queries above R_N raise instead of answering False."""
    p = operator.index(p)
    if p > rt.largest:
        raise RangeError(
            f"{p} is above R_{rt.count} = {rt.largest}; compute more Ramanujan primes",
            available=rt.largest,
        )
    i = int(np.searchsorted(rt.values, p))
    return i < rt.count and int(rt.values[i]) == p


def ramanujan_count_covering(table: PrimeTable, x: int) -> int:
    """An N with R_N >= x, from R_N > p_{2N} (N > 1).

    Needs ``table`` to reach x; the resulting N may need a larger table to compute.
    """
    return max(2, (table.pi(x) + 1) // 2 + 1)


def _plain_pi_list(horizon: int) -> list[int]:
    # pure-Python sieve, deliberately sharing nothing with build_table
    flags = [False, False] + [True] * (horizon - 1)
    for p in range(2, math.isqrt(horizon) + 1):
        if flags[p]:
            for m in range(p * p, horizon + 1, p):
                flags[m] = False
    pi, count = [0] * (horizon + 1), 0
    for x in range(horizon + 1):
        count += flags[x]
        pi[x] = count
    return pi


def brute_force_ramanujan(n: int, horizon: int) -> int:
    """Smallest R with pi(x) - pi(x/2) >= n for every integer x in [R, horizon].

    A direct reading of the definition: walk x down from ``horizon`` and stop at
    the first x with s(x) < n. Requires ``horizon >= scan_bound_for(n)`` so the
    answer is R_n itself.
    """
    if horizon < scan_bound_for(n):
        raise UsageError(f"horizon {horizon} is below scan_bound_for({n}) = {scan_bound_for(n)}")
    pi = _plain_pi_list(horizon)
    x = horizon
    while x >= 1 and pi[x] - pi[x // 2] >= n:
        x -= 1
    return x + 1

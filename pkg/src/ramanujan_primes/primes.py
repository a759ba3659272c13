"""Dense prime tables built with a segmented sieve of Eratosthenes.

A :class:`PrimeTable` stores, for every integer in ``[0, limit]``, a primality
flag and the prime count ``pi(x)``, plus the ordered list of primes. After the
build every query is a single array lookup.
"""

from __future__ import annotations

import math
import operator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import RangeError, ResourceError, UsageError

__all__ = [
    "DEFAULT_MEMORY_BUDGET",
    "DEFAULT_SEGMENT_SIZE",
    "PrimeTable",
    "build_table",
    "estimate_table_bytes",
    "limit_for_nth_prime",
    "nth_prime_upper_bound",
]

DEFAULT_SEGMENT_SIZE = 1 << 20


def _pi_dtype(limit: int) -> type:
    return np.int32 if limit < 2**31 - 1 else np.int64


def estimate_table_bytes(limit: int) -> int:
    """Upper estimate of the memory a table up to ``limit`` occupies."""
    n = limit + 1
    per_int = 1 + np.dtype(_pi_dtype(limit)).itemsize
    # pi(x) < 1.25506 x / ln x for x > 1 (Rosser & Schoenfeld)
    n_primes = 1.25506 * limit / math.log(limit) if limit > 2 else 1
    return int(n * per_int + 8 * n_primes) + 1


DEFAULT_MEMORY_BUDGET = estimate_table_bytes(10**8)


def nth_prime_upper_bound(k: int) -> int:
    """An integer strictly above p_k, usable as a sieve limit."""
    if k < 1:
        raise UsageError(f"k must be >= 1, got {k}")
    if k < 6:
        return 12
    return math.ceil(k * (math.log(k) + math.log(math.log(k))))


def limit_for_nth_prime(k: int) -> int:
    return max(2, nth_prime_upper_bound(k))


def _small_primes(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags)


def _sieve_segment(out: np.ndarray, lo: int, hi: int, base: np.ndarray) -> None:
    # marks primes of [lo, hi) into out[lo:hi]; base holds all primes <= isqrt(hi - 1)
    seg = out[lo:hi]
    seg[:] = True
    if lo < 2:
        seg[: 2 - lo] = False
    for p in base:
        p = int(p)
        pp = p * p
        if pp >= hi:
            break
        start = max(pp, -(-lo // p) * p)
        seg[start - lo :: p] = False


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """Primality flags, prefix prime counts and the prime list up to ``limit``."""

    limit: int
    primality: np.ndarray
    pi_prefix: np.ndarray
    primes: np.ndarray

    @property
    def count(self) -> int:
        """pi(limit), the number of primes in the table."""
        return int(self.primes.size)

    def _check_x(self, x: int) -> int:
        x = operator.index(x)
        if not 0 <= x <= self.limit:
            raise RangeError(f"x={x} outside table range [0, {self.limit}]", available=self.limit)
        return x

    def pi(self, x: int) -> int:
        return int(self.pi_prefix[self._check_x(x)])

    def is_prime(self, x: int) -> bool:
        return bool(self.primality[self._check_x(x)])

    def nth_prime(self, k: int) -> int:
        k = operator.index(k)
        if not 1 <= k <= self.count:
            raise RangeError(
                f"k={k} outside [1, {self.count}] for a table up to {self.limit}",
                available=self.count,
            )
        return int(self.primes[k - 1])


def build_table(
    limit: int,
    *,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    memory_budget: int | None = DEFAULT_MEMORY_BUDGET,
    workers: int = 1,
) -> PrimeTable:
    """Sieve ``[0, limit]`` segment by segment and return an immutable table.

    The result is identical for any ``segment_size`` and ``workers``; segments
    write disjoint slices of one output array. Pass ``memory_budget=None`` to
    disable the resource check.
    """
    limit = operator.index(limit)
    if limit < 2:
        raise UsageError(f"limit must be >= 2, got {limit}")
    if segment_size < 1 or workers < 1:
        raise UsageError("segment_size and workers must be positive")
    required = estimate_table_bytes(limit)
    if memory_budget is not None and required > memory_budget:
        raise ResourceError(
            f"a table up to {limit} needs ~{required} bytes, budget is {memory_budget}",
            required=required,
            budget=memory_budget,
        )

    primality = np.empty(limit + 1, dtype=bool)
    base = _small_primes(math.isqrt(limit))
    bounds = [(lo, min(lo + segment_size, limit + 1)) for lo in range(0, limit + 1, segment_size)]
    if workers == 1 or len(bounds) == 1:
        for lo, hi in bounds:
            _sieve_segment(primality, lo, hi, base)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(lambda b: _sieve_segment(primality, b[0], b[1], base), bounds))

    # prefix counts per segment; a whole-array cumsum would cast to a full-size temporary
    pi_prefix = np.empty(limit + 1, dtype=_pi_dtype(limit))
    carry = 0
    for lo, hi in bounds:
        seg = pi_prefix[lo:hi]
        np.cumsum(primality[lo:hi], dtype=seg.dtype, out=seg)
        seg += carry
        carry = int(seg[-1])
    primes = np.flatnonzero(primality).astype(np.int64, copy=False)
    for arr in (primality, pi_prefix, primes):
        arr.flags.writeable = False
    return PrimeTable(limit=limit, primality=primality, pi_prefix=pi_prefix, primes=primes)

"""Run-length and twin-prime statistics of the Ramanujan / non-Ramanujan split."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import CoverageError, UsageError
from .primes import PrimeTable
from .ramanujan import RamanujanTable
from .report import FAIL, PASS, CheckReport, make_report

__all__ = [
    "EULER_GAMMA",
    "PAIR_CONVENTIONS",
    "RAMANUJAN",
    "NON_RAMANUJAN",
    "RatioEvent",
    "RunRecord",
    "RunSummary",
    "TwinPair",
    "classify_first_primes",
    "conjecture3_series",
    "conjecture3_thresholds",
    "finch_expected_run",
    "longest_runs",
    "maximal_runs",
    "enumerate_twins",
    "proposition1_verify",
    "twin_step_identity",
]

EULER_GAMMA = 0.5772156649
RAMANUJAN = "ramanujan"
NON_RAMANUJAN = "non_ramanujan"
PAIR_CONVENTIONS = ("larger", "smaller")


@dataclass(frozen=True)
class RunRecord:
    """A maximal block of consecutive primes p_k.. of one kind (1-based k)."""

    kind: str
    start_prime_index: int
    length: int

    @property
    def end_prime_index(self) -> int:
        return self.start_prime_index + self.length - 1


class RunSummary(NamedTuple):
    longest_ramanujan: RunRecord | None
    longest_non_ramanujan: RunRecord | None
    multiplicity: dict[str, dict[int, int]]


@dataclass(frozen=True)
class TwinPair:
    p: int
    q: int
    both_ramanujan: bool


class RatioEvent(NamedTuple):
    x: int
    pairs: int
    both_ramanujan: int
    ratio: float


def classify_first_primes(rt: RamanujanTable, m: int) -> np.ndarray:
    """Boolean array b with b[k - 1] true iff p_k is a Ramanujan prime, k <= m."""
    if m < 1:
        raise UsageError(f"m must be >= 1, got {m}")
    covered = int(rt.prime_index[-1])
    if m > covered:
        raise CoverageError(
            f"first {m} primes requested but R_{rt.count} = p_{covered}; compute more Ramanujan primes"
        )
    flags = np.zeros(m, dtype=bool)
    idx = rt.prime_index[rt.prime_index <= m]
    flags[idx - 1] = True
    return flags


def maximal_runs(flags: np.ndarray) -> list[RunRecord]:
    """Split a boolean sequence into maximal runs; True marks Ramanujan primes."""
    flags = np.asarray(flags, dtype=bool)
    if flags.size == 0:
        return []
    starts = np.concatenate(([0], np.flatnonzero(flags[1:] != flags[:-1]) + 1))
    lengths = np.diff(np.append(starts, flags.size))
    return [
        RunRecord(RAMANUJAN if flags[s] else NON_RAMANUJAN, int(s) + 1, int(n))
        for s, n in zip(starts, lengths)
    ]


def longest_runs(rt: RamanujanTable, m: int) -> RunSummary:
    """Longest run of each kind over p_1..p_m (earliest on ties) and run-length counts."""
    runs = maximal_runs(classify_first_primes(rt, m))
    longest: dict[str, RunRecord | None] = {RAMANUJAN: None, NON_RAMANUJAN: None}
    multiplicity: dict[str, dict[int, int]] = {RAMANUJAN: {}, NON_RAMANUJAN: {}}
    for run in runs:
        counts = multiplicity[run.kind]
        counts[run.length] = counts.get(run.length, 0) + 1
        best = longest[run.kind]
        if best is None or run.length > best.length:
            longest[run.kind] = run
    multiplicity = {kind: dict(sorted(c.items())) for kind, c in multiplicity.items()}
    return RunSummary(longest[RAMANUJAN], longest[NON_RAMANUJAN], multiplicity)


def finch_expected_run(n: int) -> float:
    """(ln n + gamma) / ln 2 - 3/2: expected longest run of heads in n fair tosses."""
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    return (math.log(n) + EULER_GAMMA) / math.log(2) - 1.5


def _ramanujan_flags(rt: RamanujanTable, limit: int) -> np.ndarray:
    if limit > rt.largest:
        raise CoverageError(f"limit {limit} is above R_{rt.count} = {rt.largest}")
    flags = np.zeros(limit + 1, dtype=bool)
    flags[rt.values[rt.values <= limit]] = True
    return flags


def _twin_arrays(table: PrimeTable, rt: RamanujanTable, limit: int) -> tuple[np.ndarray, np.ndarray]:
    if limit > table.limit:
        raise CoverageError(f"limit {limit} is above the prime table limit {table.limit}")
    primes = table.primes
    p = primes[primes + 2 <= limit]
    p = p[table.primality[p + 2]]
    is_r = _ramanujan_flags(rt, limit)
    return p, is_r[p] & is_r[p + 2]


def enumerate_twins(table: PrimeTable, rt: RamanujanTable, limit: int) -> list[TwinPair]:
    """Twin pairs (p, p + 2) with p + 2 <= limit, ordered by p."""
    p, both = _twin_arrays(table, rt, limit)
    return [TwinPair(int(a), int(a) + 2, bool(b)) for a, b in zip(p, both)]


def twin_step_identity(table: PrimeTable, p: int, q: int) -> bool:
    """Whether pi(q) - pi(q/2) == pi(p) - pi(p/2) + 1."""
    s = table.pi_prefix
    return int(s[q]) - int(s[q // 2]) == int(s[p]) - int(s[p // 2]) + 1


def proposition1_verify(table: PrimeTable, limit: int | None = None) -> CheckReport:
    """s(p + 2) = s(p) + 1 for every twin pair with p > 5 and p + 2 <= limit.

    Twin primes above 5 are 6k - 1, 6k + 1 and 3k is composite, so moving from
    p to q adds the prime q on top without adding one at the bottom.
    """
    limit = table.limit if limit is None else limit
    if limit > table.limit:
        raise CoverageError(f"limit {limit} is above the prime table limit {table.limit}")
    primes = table.primes
    p = primes[(primes > 5) & (primes + 2 <= limit)]
    p = p[table.primality[p + 2]]
    pi = table.pi_prefix.astype(np.int64)
    q = p + 2
    ok = (pi[q] - pi[q // 2]) == (pi[p] - pi[p // 2] + 1)
    status = np.where(ok, PASS, FAIL).astype(np.int8)
    return make_report("proposition1", 7, limit, p, status, statement="s(p + 2) = s(p) + 1 for twin primes p > 5")


def _ratio_events(table: PrimeTable, rt: RamanujanTable, xmax: int, convention: str) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    if convention not in PAIR_CONVENTIONS:
        raise UsageError(f"pair convention must be one of {PAIR_CONVENTIONS}, got {convention!r}")
    # pairs anchored by p may have q = xmax + 1, so classify one step further
    reach = xmax + 2 if convention == "smaller" else xmax
    p, both = _twin_arrays(table, rt, reach)
    anchor = p + 2 if convention == "larger" else p
    keep = anchor <= xmax
    return anchor[keep], np.cumsum(np.ones(keep.sum(), dtype=np.int64)), np.cumsum(both[keep], dtype=np.int64)


def conjecture3_series(
    table: PrimeTable,
    rt: RamanujanTable,
    xmax: int,
    *,
    convention: str = "larger",
    start: int = 571,
) -> tuple[list[RatioEvent], CheckReport]:
    """Share of twin pairs up to x that are both Ramanujan, checked > 1/4 on [start, xmax].

    The share only changes where a pair's anchor (its larger or smaller member)
    is reached, so the series lists those event points and the check examines
    x = start plus every event in (start, xmax] with exact integer arithmetic.
    """
    anchors, total, both = _ratio_events(table, rt, xmax, convention)
    series = [RatioEvent(int(x), int(t), int(b), float(b) / float(t)) for x, t, b in zip(anchors, total, both)]

    before = np.flatnonzero(anchors <= start)
    if before.size == 0:
        raise UsageError(f"no twin pair is anchored at or below {start}")
    i0 = int(before[-1])
    points = np.concatenate(([start], anchors[i0 + 1 :]))
    t = total[i0:]
    b = both[i0:]
    status = np.where(4 * b > t, PASS, FAIL).astype(np.int8)
    report = make_report(
        "conjecture3", start, xmax, points, status,
        statement="#both-Ramanujan twin pairs / #twin pairs > 1/4", convention=convention,
        events_checked=int(points.size),
    )
    report.samples_checked = max(0, xmax - start + 1)
    return series, report


def conjecture3_thresholds(table: PrimeTable, rt: RamanujanTable, xmax: int) -> dict[str, int | None]:
    """For each pair convention, the smallest x0 with ratio > 1/4 on all of [x0, xmax]."""
    out: dict[str, int | None] = {}
    for convention in PAIR_CONVENTIONS:
        anchors, total, both = _ratio_events(table, rt, xmax, convention)
        bad = np.flatnonzero(4 * both <= total)
        if bad.size == 0:
            out[convention] = int(anchors[0]) if anchors.size else None
        elif bad[-1] + 1 < anchors.size:
            out[convention] = int(anchors[bad[-1] + 1])
        else:
            out[convention] = None
    return out

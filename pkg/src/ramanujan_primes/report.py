"""Check reports and the floating-point comparison policy used by all sweeps.

A comparison between an exact side and a floating-point side is decided only
when the gap exceeds four units of relative rounding error; anything closer
is classified as indeterminate, never as a pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

__all__ = ["CheckReport", "MARGIN_ULPS", "PASS", "INDETERMINATE", "FAIL", "classify_less", "classify_less_exact", "combine", "make_report"]

MARGIN_ULPS = 4
_EPS = float(np.finfo(np.float64).eps)

PASS, INDETERMINATE, FAIL = 0, 1, 2


@dataclass
class CheckReport:
    """Outcome of one sweep.

    ``first_failure`` is the smallest input that did not pass: the smallest
    definite violation when there is one, otherwise the smallest
    indeterminate point. ``passed`` is true exactly when it is ``None``.
    """

    check_id: str
    range: tuple[float, float]
    samples_checked: int
    first_failure: float | None = None
    status: str = "pass"
    indeterminate: int = 0
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    def to_dict(self) -> dict[str, Any]:
        return {
            "check_id": self.check_id,
            "range": list(self.range),
            "passed": self.passed,
            "status": self.status,
            "first_failure": self.first_failure,
            "samples_checked": self.samples_checked,
            "indeterminate": self.indeterminate,
            "notes": self.notes,
        }

    def to_line(self) -> str:
        ff = "-" if self.first_failure is None else _fmt_num(self.first_failure)
        lo, hi = self.range
        return (
            f"{self.check_id} {self.status.upper()} range=[{_fmt_num(lo)},{_fmt_num(hi)}] "
            f"samples={self.samples_checked} first_failure={ff} indeterminate={self.indeterminate}"
        )


def _fmt_num(v: float) -> str:
    if isinstance(v, (int, np.integer)) or float(v).is_integer():
        return str(int(v))
    return repr(float(v))


def _as_number(v: Any) -> float:
    v = float(v)
    return int(v) if v.is_integer() else v


def classify_less(lhs: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Per-element status of the strict inequality ``lhs < rhs``."""
    lhs = np.asarray(lhs, dtype=np.float64)
    rhs = np.asarray(rhs, dtype=np.float64)
    gap = rhs - lhs
    tol = MARGIN_ULPS * _EPS * np.maximum(np.abs(lhs), np.abs(rhs))
    status = np.full(gap.shape, INDETERMINATE, dtype=np.int8)
    status[gap > tol] = PASS
    status[gap < -tol] = FAIL
    return status


def classify_less_exact(lhs: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    return np.where(np.asarray(lhs) < np.asarray(rhs), PASS, FAIL).astype(np.int8)


def make_report(
    check_id: str,
    lo: float,
    hi: float,
    inputs: np.ndarray,
    status: np.ndarray,
    **notes: Any,
) -> CheckReport:
    report = CheckReport(check_id=check_id, range=(_as_number(lo), _as_number(hi)), samples_checked=int(status.size))
    fails = np.flatnonzero(status == FAIL)
    undecided = np.flatnonzero(status == INDETERMINATE)
    report.indeterminate = int(undecided.size)
    if fails.size:
        report.status = "fail"
        report.first_failure = _as_number(inputs[fails[0]])
    elif undecided.size:
        report.status = "indeterminate"
        report.first_failure = _as_number(inputs[undecided[0]])
    if undecided.size:
        notes["first_indeterminate"] = _as_number(inputs[undecided[0]])
    report.notes = notes
    return report


def combine(*statuses: np.ndarray) -> np.ndarray:
    out = statuses[0].copy()
    for st in statuses[1:]:
        np.maximum(out, st, out=out)
    return out

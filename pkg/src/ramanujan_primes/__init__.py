"""Ramanujan primes: computation, explicit bound sweeps, run and twin statistics."""

from .errors import (
    CoverageError,
    DomainError,
    RamanujanPrimesError,
    RangeError,
    ResourceError,
    UsageError,
)
from .primes import PrimeTable, build_table
from .ramanujan import (
    RamanujanTable,
    brute_force_ramanujan,
    compute_ramanujan,
    is_ramanujan,
    s_value,
    scan_bound_for,
)
from .report import CheckReport

__all__ = [
    "CheckReport",
    "CoverageError",
    "DomainError",
    "PrimeTable",
    "RamanujanPrimesError",
    "RamanujanTable",
    "RangeError",
    "ResourceError",
    "UsageError",
    "brute_force_ramanujan",
    "build_table",
    "compute_ramanujan",
    "is_ramanujan",
    "s_value",
    "scan_bound_for",
]

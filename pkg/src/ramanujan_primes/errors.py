"""Exception types shared across the package."""

from __future__ import annotations


class RamanujanPrimesError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(RamanujanPrimesError, ValueError):
    """An argument violates a documented precondition."""


class DomainError(UsageError):
    """A real-valued bound was evaluated outside the range where it is asserted."""


class RangeError(RamanujanPrimesError, IndexError):
    """A query falls outside what a table has computed.

    ``available`` carries the largest valid query (for example ``pi(limit)``
    for an n-th prime lookup) so callers can rebuild a larger table.
    """

    def __init__(self, message: str, available: int | None = None):
        super().__init__(message)
        self.available = available


class ResourceError(RamanujanPrimesError):
    """The requested computation would exceed the configured memory budget."""

    def __init__(self, message: str, required: int | None = None, budget: int | None = None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class CoverageError(ResourceError):
    """A supplied table does not reach far enough for the requested check."""

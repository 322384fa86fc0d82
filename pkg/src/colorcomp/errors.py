"""Exception types raised by colorcomp."""

from __future__ import annotations


class ColorCompError(Exception):
    """Base class for all colorcomp errors."""


class FamilyError(ColorCompError, ValueError):
    """A color family was constructed with invalid parameters."""


class DomainError(ColorCompError, ValueError):
    """An argument lies outside the domain of a formula."""


class CapExceededError(ColorCompError):
    """A resource guard refused to run a computation.

    ``estimate`` carries the size that triggered the guard (a table size or
    an estimated number of emitted items) when one is known.
    """

    def __init__(self, message: str, estimate: int | None = None) -> None:
        super().__init__(message)
        self.estimate = estimate


class ConsistencyError(ColorCompError, AssertionError):
    """Two computations that must agree did not."""

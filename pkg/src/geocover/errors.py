"""Exception types shared across the package."""

from __future__ import annotations


class GeocoverError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(GeocoverError):
    """A constructor parameter is out of range; message carries the value."""


class UnknownStandardGraphError(GeocoverError):
    """Unrecognized standard-graph tag."""


class SizeGuardError(GeocoverError):
    """Input exceeds a size guard for an exhaustive algorithm."""


class BudgetExceededError(GeocoverError):
    """A configurable work budget ran out before the computation finished.

    ``bracket`` optionally carries the (lower, upper) interval established
    so far when a cover-number search is interrupted.
    """

    def __init__(self, message: str, bracket: tuple[int, int] | None = None):
        super().__init__(message)
        self.bracket = bracket


class FileFormatError(GeocoverError):
    """Malformed graph / cover / weights document."""


class CoverageError(GeocoverError):
    """A cover fails to span every segment (distinct from LP infeasibility)."""


class InconsistentConfigError(GeocoverError):
    """Point identifications contradict a configuration's orders."""

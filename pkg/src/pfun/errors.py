"""Exception hierarchy shared by every pfun module."""

from __future__ import annotations


class PFunError(Exception):
    """Base class for all errors raised by pfun."""


class DomainError(PFunError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class BracketError(PFunError, ValueError):
    """A root-finding interval does not bracket a sign change."""


class ConvergenceError(PFunError, ArithmeticError):
    """An iterative method stopped before reaching its tolerance.

    ``estimate`` holds the best value found and ``error`` the last error
    estimate (``nan`` when none is available).
    """

    def __init__(self, message: str, estimate: float = float("nan"), error: float = float("nan")):
        super().__init__(message)
        self.estimate = estimate
        self.error = error

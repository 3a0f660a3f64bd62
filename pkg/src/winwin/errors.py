"""Semantic exception hierarchy shared by all winwin modules."""

from __future__ import annotations


class WinWinError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(WinWinError, ValueError):
    """A value violates a documented invariant of a domain type or operation.

    Attributes:
        field: Name of the offending field or parameter.
    """

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class ParseError(WinWinError, ValueError):
    """Scenario text is structurally broken: bad JSON, or a missing/mistyped field.

    Attributes:
        field: Field path of the problem, or "<json>" for malformed documents.
    """

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class DomainError(WinWinError, ArithmeticError):
    """A wealth level left the domain of the chosen utility function."""


class BankruptcyError(WinWinError, ArithmeticError):
    """An outcome with positive probability drives wealth to zero or below.

    Under multiplicative dynamics this means the time-average growth rate
    diverges to negative infinity; it is an explicit error state rather than
    a large negative number so that root finding can never step across it
    silently.
    """


class NoRootInBracket(WinWinError):
    """Both bracket endpoints of a root search have the same sign."""


class DegenerateFit(WinWinError):
    """A least-squares slope fit has no usable data (coincident abscissae,
    fewer than three points, or residuals that underflowed to zero)."""

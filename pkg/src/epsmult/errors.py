"""Exception types shared across the package.

The CLI maps these onto exit codes: syntax errors exit 4, inconclusive
stabilization exits 2, every other precondition violation exits 3.
"""

from __future__ import annotations


class EpsmultError(Exception):
    """Base class for all errors raised by this package on bad input."""


class DimensionMismatchError(EpsmultError):
    """Operands live in a different number of variables."""


class ZeroIdealError(EpsmultError):
    """An operation that requires a nonzero (or non-unit) ideal got one."""


class InfiniteColengthError(EpsmultError):
    """The quotient has infinite length; there is no number to report."""


class InconclusiveError(EpsmultError):
    """A finite-difference tail did not stabilize within the window."""

    def __init__(self, message: str, k_max: int | None = None):
        super().__init__(message)
        self.k_max = k_max


class InsufficientDataError(EpsmultError):
    """A semigroup check was asked to run on no data at all."""


class IdealSyntaxError(EpsmultError):
    """Unparseable ideal text; carries a 1-based line/column position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(message)
        self.line = line
        self.column = column

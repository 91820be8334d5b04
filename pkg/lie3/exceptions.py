"""Exceptions for the 3-Lie toolkit.

Verification failures are never raised; checks return a CheckReport.
These exceptions cover malformed input and broken preconditions.
"""


class Lie3Error(Exception):
    """Base exception for 3-Lie toolkit errors."""

    pass


class ShapeError(Lie3Error):
    """Rank, dimension or slot mismatch."""

    pass


class DomainError(Lie3Error):
    """A documented precondition of an operation does not hold."""

    pass


class CapacityError(Lie3Error):
    """An enumeration bound was exceeded."""

    pass


class ParameterError(Lie3Error):
    """Illegal or unparsable catalog parameters."""

    pass


class UnknownCaseError(Lie3Error, LookupError):
    """Catalog case id not found."""

    pass


class ParseError(Lie3Error):
    """Malformed algebra, derivation or table text."""

    def __init__(self, message: str, line_number: int | None = None):
        self.message = message
        self.line_number = line_number
        if line_number is None:
            super().__init__(message)
        else:
            super().__init__(f"line {line_number}: {message}")

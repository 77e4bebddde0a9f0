"""Exception hierarchy for qrk."""

from typing import Any


class QrkError(Exception):
    """Base class for every error raised by qrk."""


class ZeroDenominatorError(QrkError):
    """Raised when a division by zero (or by a series without constant term) is attempted."""


class InexactDivisionError(QrkError):
    """Raised when an exact polynomial division leaves a remainder."""

    def __init__(self, remainder: Any) -> None:
        super().__init__(f"division is not exact, remainder {remainder}")
        self.remainder = remainder


class VariableMismatchError(QrkError):
    """Raised when arithmetic mixes polynomials in different variables."""


class EvaluationError(QrkError):
    """Raised when a value cannot be evaluated at the requested point."""


class TruncationError(QrkError):
    """Raised when reading a coefficient beyond a series' truncation order."""


class PreconditionError(QrkError):
    """Raised when an operation's arguments violate its preconditions."""


class NonIntegerCoefficientError(PreconditionError):
    """Raised when reduction modulo [m] meets a non-integer coefficient."""


class ValuationError(QrkError):
    """Raised when an infinite sum's term orders do not strictly increase."""


class DslSyntaxError(QrkError):
    """Raised when an identity expression cannot be parsed."""

    def __init__(self, position: int, expected: list[str], found: str) -> None:
        expected_text = ", ".join(expected)
        super().__init__(f"at position {position}: expected one of {expected_text}; found {found!r}")
        self.position = position
        self.expected = expected
        self.found = found


class DslEvaluationError(QrkError):
    """Raised when a parsed expression cannot be evaluated."""


class UnknownIdentityError(QrkError):
    """Raised when an identity id is not in the registry."""

    def __init__(self, identity_id: str) -> None:
        super().__init__(f"Unknown identity: {identity_id}")
        self.identity_id = identity_id

"""Exceptions raised by polyadica."""
from typing import Any, Dict


class PolyadicError(ValueError):
    """Base class, carries the equation that failed and its quantities."""

    def __init__(self, message: str, equation: str = "", **details: Any):
        super().__init__(message)
        self.equation = equation
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": type(self).__name__,
            "equation": self.equation,
            "message": str(self),
            **self.details,
        }


class NotQuantized(PolyadicError):
    pass


class OutOfBounds(PolyadicError):
    pass


class LengthMismatch(PolyadicError):
    pass


class NotInCarrier(PolyadicError):
    pass


class NoMultiplicativeArity(PolyadicError):
    pass


class NoMatchingClass(PolyadicError):
    pass

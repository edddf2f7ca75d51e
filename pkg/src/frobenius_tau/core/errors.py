"""Exception hierarchy for the engine."""

from __future__ import annotations


class FrobeniusTauError(ValueError):
    """Base class for every domain error raised by the engine."""


class FieldMismatchError(FrobeniusTauError):
    """Operands belong to different coefficient rings."""


class DimensionMismatchError(FrobeniusTauError):
    """Exponent vectors of different lengths were compared."""


class DegreeCapExceededError(FrobeniusTauError):
    """A Gröbner computation needed an S-pair above the configured degree cap."""

    def __init__(self, degree: int, cap: int) -> None:
        super().__init__(f"S-pair of degree {degree} exceeds the degree cap {cap}")
        self.degree = degree
        self.cap = cap


class NotInMaximalIdealError(FrobeniusTauError):
    """The polynomial does not vanish at the origin."""


class InvalidDivisorError(FrobeniusTauError):
    """A divisor component is negative, zero or a unit."""


class InconclusiveChainError(FrobeniusTauError):
    """A test-ideal chain hit its level cap where a definite answer is required."""


class ChainInvariantError(FrobeniusTauError):
    """A test-ideal chain stopped ascending."""


class ParseError(FrobeniusTauError):
    """Malformed polynomial, rational or divisor text."""

    def __init__(self, message: str, position: int | None = None) -> None:
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")
        self.message = message
        self.position = position


class UnknownVariableError(ParseError):
    """A variable name outside the ring's variables."""


class CoefficientOverflowError(ParseError):
    """An integer literal wider than the allowed machine width."""

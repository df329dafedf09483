"""
Exception hierarchy shared by every package.
Each error carries the CLI exit code it maps to.
"""
from typing import Optional


class GrowthLabError(Exception):
    exit_code = 5


class SpecParseError(GrowthLabError):
    exit_code = 2

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class SpecValueError(GrowthLabError):
    exit_code = 2


class InvalidWordError(GrowthLabError):
    exit_code = 2


class MixedRealizationError(GrowthLabError):
    exit_code = 5


class RadiusMismatchError(GrowthLabError):
    exit_code = 2


class AlphabetMismatchError(GrowthLabError):
    exit_code = 2


class BudgetExceededError(GrowthLabError):
    exit_code = 4


class BallCapExceeded(BudgetExceededError):
    """Raised when a ball outgrows the element cap; keeps the last complete ball."""

    def __init__(self, radius: int, size: int, cap: int, partial=None):
        self.radius = radius
        self.size = size
        self.cap = cap
        self.partial = partial
        super().__init__(f"cap exceeded at radius {radius} ({size} > {cap} elements)")


class CombinatorialCapExceeded(BudgetExceededError):
    pass


class AssertionFailure(GrowthLabError):
    exit_code = 3

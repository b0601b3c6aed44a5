"""
Exception hierarchy shared by every package.
The CLI and the API translate these into exit codes and HTTP statuses.
"""

from typing import Iterable, Optional


class SetFunctionError(Exception):
    """Base class for toolkit errors."""


class InvalidInputError(SetFunctionError, ValueError):
    """Malformed mask, shape, model, spec or oracle string."""


class CapacityError(SetFunctionError, MemoryError):
    """A dense vector of length 2^n cannot be allocated."""

    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"Dense representation of n={n} exceeds the capacity limit n<={limit}")


class RecoveryError(SetFunctionError):
    """A coefficient system could not be solved."""

    def __init__(self, message: str, support: Optional[Iterable[int]] = None):
        self.support = sorted(support) if support is not None else []
        super().__init__(message)


class DegenerateFilterError(RecoveryError):
    """The sampled filter has (numerically) zero response at a recovered frequency."""

    def __init__(self, frequency: int, response: float, seed: Optional[int]):
        self.frequency = frequency
        self.response = response
        self.seed = seed
        super().__init__(
            f"Frequency response {response:.3e} at frequency bits {frequency} is below the guard "
            f"(seed={seed}); reseed and retry",
            support=[frequency],
        )


class UndefinedErrorEstimate(SetFunctionError, ZeroDivisionError):
    """The truth vanishes on every sampled set, so the ratio has no value."""

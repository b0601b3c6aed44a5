"""
Query interface A -> s(A) with a per-instance query counter.

Every generator, dense vector, sparse spectrum and filtered function is
consumed through this interface, so query accounting is uniform.
"""

import copy
from abc import ABC, abstractmethod
from typing import Callable

import numpy as np

from .exceptions import InvalidInputError
from .subsets import as_bits, indicators_to_masks


class SetFunctionOracle(ABC):
    """
    Base class for counting set function oracles.

    Subclasses implement _evaluate on raw bits and may override
    _evaluate_many with a vectorised batch path. Instances are single-owner;
    use clone() for an independent copy with a fresh counter.
    """

    def __init__(self, n: int):
        if int(n) < 1:
            raise InvalidInputError(f"Ground set size must be positive, got {n}")
        self.n = int(n)
        self.query_count = 0

    def eval(self, mask) -> float:
        bits = as_bits(mask, self.n)
        self.query_count += 1
        return float(self._evaluate(bits))

    def __call__(self, mask) -> float:
        return self.eval(mask)

    def eval_many(self, indicators: np.ndarray) -> np.ndarray:
        """Evaluate an (S, n) membership matrix; counts S queries."""
        indicators = np.asarray(indicators, dtype=bool)
        if indicators.ndim != 2 or indicators.shape[1] != self.n:
            raise InvalidInputError(
                f"Expected a membership matrix with {self.n} columns, got shape {indicators.shape}"
            )
        self.query_count += indicators.shape[0]
        if indicators.shape[0] == 0:
            return np.zeros(0)
        return np.asarray(self._evaluate_many(indicators), dtype=float)

    @abstractmethod
    def _evaluate(self, bits: int) -> float:
        """Value at a validated mask."""

    def _evaluate_many(self, indicators: np.ndarray) -> np.ndarray:
        return np.array([self._evaluate(bits) for bits in indicators_to_masks(indicators)], dtype=float)

    def clone(self) -> "SetFunctionOracle":
        twin = copy.copy(self)
        twin.query_count = 0
        return twin

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, query_count={self.query_count})"


class CallableOracle(SetFunctionOracle):
    """Wrap a plain function of the raw bits."""

    def __init__(self, n: int, function: Callable[[int], float]):
        super().__init__(n)
        self.function = function

    def _evaluate(self, bits: int) -> float:
        return float(self.function(bits))

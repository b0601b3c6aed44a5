"""
Dense set functions: all 2^n values in lexicographic indicator order.
"""

import logging
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from config import evaluation_config, transform_config
from .exceptions import CapacityError, InvalidInputError
from .oracle import SetFunctionOracle
from .subsets import SubsetMask, as_bits, lex_indicators, lex_rank

logger = logging.getLogger(__name__)


def check_dense_capacity(n: int) -> None:
    limit = transform_config.max_dense_n
    if n > limit or (1 << n) * 8 > sys.maxsize:
        raise CapacityError(n, limit)


@dataclass(frozen=True, eq=False)
class DenseSetFunction:
    """Immutable vector of 2^n values; index r holds s at the set of rank r."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        n = int(self.n)
        if n < 1:
            raise InvalidInputError(f"Ground set size must be positive, got {n}")
        check_dense_capacity(n)
        values = np.array(self.values, dtype=float).reshape(-1)
        if values.shape[0] != 1 << n:
            raise InvalidInputError(f"Expected {1 << n} values for n={n}, got {values.shape[0]}")
        values.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", values)

    @classmethod
    def zeros(cls, n: int) -> "DenseSetFunction":
        check_dense_capacity(n)
        return cls(n, np.zeros(1 << n))

    @classmethod
    def from_values(cls, values) -> "DenseSetFunction":
        """Infer n from a vector whose length is a power of two."""
        values = np.asarray(values, dtype=float).reshape(-1)
        n = int(values.shape[0]).bit_length() - 1
        if n < 1 or values.shape[0] != 1 << n:
            raise InvalidInputError(f"Length {values.shape[0]} is not a power of two >= 2")
        return cls(n, values)

    def __getitem__(self, mask) -> float:
        return float(self.values[lex_rank(as_bits(mask, self.n), self.n)])

    def __len__(self) -> int:
        return self.values.shape[0]

    def at(self, elements) -> float:
        return self[SubsetMask.from_elements(elements, self.n)]

    def allclose(self, other: "DenseSetFunction", atol: float = 1e-9, rtol: float = 1e-9) -> bool:
        return self.n == other.n and bool(np.allclose(self.values, other.values, atol=atol, rtol=rtol))


class DenseOracle(SetFunctionOracle):
    """Oracle reading from a dense vector."""

    def __init__(self, function: DenseSetFunction):
        super().__init__(function.n)
        self.function = function
        self._weights = np.left_shift(1, np.arange(function.n - 1, -1, -1, dtype=np.int64))

    def _evaluate(self, bits: int) -> float:
        return float(self.function.values[lex_rank(bits, self.n)])

    def _evaluate_many(self, indicators: np.ndarray) -> np.ndarray:
        ranks = indicators.astype(np.int64) @ self._weights
        return self.function.values[ranks]


def oracle_from_dense(function: DenseSetFunction) -> DenseOracle:
    return DenseOracle(function)


def densify(oracle: SetFunctionOracle, batch_size: Optional[int] = None) -> DenseSetFunction:
    """Query the oracle on every subset, in rank order."""
    n = oracle.n
    check_dense_capacity(n)
    batch_size = batch_size or evaluation_config.batch_size
    total = 1 << n
    values = np.empty(total)
    for start in range(0, total, batch_size):
        stop = min(total, start + batch_size)
        values[start:stop] = oracle.eval_many(lex_indicators(n, start, stop))
    logger.debug(f"Densified {type(oracle).__name__} over n={n} ({total} queries)")
    return DenseSetFunction(n, values)

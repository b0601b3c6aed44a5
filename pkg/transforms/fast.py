"""
Fast dense Fourier transforms for models 3, 4 and 5.

Each transform is the n-fold Kronecker power of a 2x2 matrix (row/column 0
means the element is absent, 1 that it is present). It runs in place as n
stages of 2^(n-1) butterflies, stage i pairing the entries that differ only
in x_i. The WHT forward matrix is the unnormalised +-1 matrix; the 1/2^n
factor sits on the inverse.
"""

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from core import DenseSetFunction, InvalidInputError, ModelId

logger = logging.getLogger(__name__)

Butterfly = Callable[[np.ndarray, np.ndarray], Tuple[np.ndarray, np.ndarray]]

# 2x2 factors, (model, inverse) -> matrix
KERNEL_MATRICES: Dict[Tuple[ModelId, bool], np.ndarray] = {
    (ModelId.UNION, False): np.array([[0.0, 1.0], [1.0, -1.0]]),
    (ModelId.UNION, True): np.array([[1.0, 1.0], [1.0, 0.0]]),
    (ModelId.DIFFERENCE, False): np.array([[1.0, 0.0], [1.0, -1.0]]),
    (ModelId.DIFFERENCE, True): np.array([[1.0, 0.0], [1.0, -1.0]]),
    (ModelId.WHT, False): np.array([[1.0, 1.0], [1.0, -1.0]]),
    (ModelId.WHT, True): np.array([[0.5, 0.5], [0.5, -0.5]]),
}

BUTTERFLIES: Dict[Tuple[ModelId, bool], Butterfly] = {
    (ModelId.UNION, False): lambda a, b: (b, a - b),
    (ModelId.UNION, True): lambda a, b: (a + b, a),
    (ModelId.DIFFERENCE, False): lambda a, b: (a, a - b),
    (ModelId.DIFFERENCE, True): lambda a, b: (a, a - b),
    (ModelId.WHT, False): lambda a, b: (a + b, a - b),
    (ModelId.WHT, True): lambda a, b: (a + b, a - b),
}


@dataclass
class ButterflyCounter:
    """Instrumentation for the number of 2-point butterflies executed."""
    butterflies: int = 0
    stages: int = 0


def _run_stages(values: np.ndarray, n: int, butterfly: Butterfly, counter: Optional[ButterflyCounter]) -> np.ndarray:
    for i in range(n):
        view = values.reshape(1 << i, 2, 1 << (n - 1 - i))
        absent = view[:, 0, :].copy()
        present = view[:, 1, :].copy()
        view[:, 0, :], view[:, 1, :] = butterfly(absent, present)
        if counter is not None:
            counter.butterflies += 1 << (n - 1)
            counter.stages += 1
    return values


def _transform(
    f: DenseSetFunction, model, inverse: bool, counter: Optional[ButterflyCounter]
) -> DenseSetFunction:
    model = ModelId.parse(model)
    values = np.array(f.values, dtype=float)
    _run_stages(values, f.n, BUTTERFLIES[(model, inverse)], counter)
    if model == ModelId.WHT and inverse:
        values /= float(1 << f.n)
    return DenseSetFunction(f.n, values)


def dense_ft(
    f: DenseSetFunction, model, counter: Optional[ButterflyCounter] = None
) -> DenseSetFunction:
    """Forward transform: returns the coefficient vector indexed by frequency rank."""
    return _transform(f, model, False, counter)


def dense_ift(
    coeffs: DenseSetFunction, model, counter: Optional[ButterflyCounter] = None
) -> DenseSetFunction:
    """Exact inverse of dense_ft for the same model."""
    return _transform(coeffs, model, True, counter)


def transform_matrix(model, n: int, inverse: bool = False) -> np.ndarray:
    """Explicit 2^n x 2^n matrix as the n-fold Kronecker power of the 2x2 factor."""
    if n < 1:
        raise InvalidInputError(f"Ground set size must be positive, got {n}")
    factor = KERNEL_MATRICES[(ModelId.parse(model), inverse)]
    return reduce(np.kron, [factor] * n)

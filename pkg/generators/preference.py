"""
Preference functions and facility location.

  p(A) = sum_{i in A} u_i
         + sum_l (max_{i in A} r_li - sum_{i in A} r_li)
         - sum_k (max_{i in A} a_ki - sum_{i in A} a_ki)

with the max over the empty set equal to 0. Facility location is the case
a = 0, u_i = sum_l r_li, leaving sum_l max_{i in A} r_li.

Each max term is a coverage function over the row's sorted values, so the
model-4 spectrum has at most 1 + n + Ln + Kn nonzeros.
"""

from collections import defaultdict
from typing import Dict, Sequence

import numpy as np

from config import evaluation_config
from core import ModelId, SetFunctionOracle, SparseFT
from core.subsets import elements_of
from models import FacilitySpec, PreferenceSpec


def _row_max_many(matrix: np.ndarray, indicators: np.ndarray) -> np.ndarray:
    """Per (sample, row) max over the selected columns, 0 for the empty set."""
    out = np.zeros((indicators.shape[0], matrix.shape[0]))
    if matrix.shape[0] == 0:
        return out
    step = max(1, evaluation_config.batch_size // max(1, matrix.shape[0]))
    for start in range(0, indicators.shape[0], step):
        block = indicators[start:start + step]
        masked = np.where(block[:, None, :], matrix[None, :, :], -np.inf).max(axis=2)
        out[start:start + step] = np.where(block.any(axis=1)[:, None], masked, 0.0)
    return out


def _max_term_coefficients(row: Sequence[float], sign: float, coefficients: Dict[int, float]) -> None:
    """
    Add sign * (max_{i in A} row_i) to a model-4 spectrum.

    With the row sorted ascending as v_(1) <= ... <= v_(n) and
    T_u = {sigma(u), ..., sigma(n)}, the max term equals
    sum_u (v_(u) - v_(u-1)) [A meets T_u], i.e. a coverage function.
    """
    order = sorted(range(len(row)), key=lambda i: (row[i], i))
    previous = 0.0
    tail = sum(1 << i for i in order)
    for i in order:
        gap = row[i] - previous
        if gap != 0.0:
            coefficients[0] += sign * gap
            coefficients[tail] -= sign * gap
        previous = row[i]
        tail &= ~(1 << i)


def _modular_coefficients(weights: Sequence[float], coefficients: Dict[int, float]) -> None:
    for i, w in enumerate(weights):
        coefficients[0] += w
        coefficients[1 << i] -= w


class PreferenceOracle(SetFunctionOracle):
    """Modular part plus repulsive and attractive max terms."""

    def __init__(self, spec: PreferenceSpec):
        super().__init__(spec.n)
        self.spec = spec
        self._u = np.asarray(spec.u, dtype=float)
        self._r = np.asarray(spec.r, dtype=float).reshape(len(spec.r), spec.n)
        self._a = np.asarray(spec.a, dtype=float).reshape(len(spec.a), spec.n)

    def _evaluate(self, bits: int) -> float:
        cols = [i - 1 for i in elements_of(bits)]
        if not cols:
            return 0.0
        value = self._u[cols].sum()
        if self._r.shape[0]:
            sub = self._r[:, cols]
            value += (sub.max(axis=1) - sub.sum(axis=1)).sum()
        if self._a.shape[0]:
            sub = self._a[:, cols]
            value -= (sub.max(axis=1) - sub.sum(axis=1)).sum()
        return float(value)

    def _evaluate_many(self, indicators: np.ndarray) -> np.ndarray:
        weights = indicators.astype(float)
        value = weights @ self._u
        value += _row_max_many(self._r, indicators).sum(axis=1) - weights @ self._r.sum(axis=0)
        value -= _row_max_many(self._a, indicators).sum(axis=1) - weights @ self._a.sum(axis=0)
        return value


class FacilityLocationOracle(SetFunctionOracle):
    """sum_l max_{i in A} r_li."""

    def __init__(self, spec: FacilitySpec):
        super().__init__(spec.n)
        self.spec = spec
        self._r = np.asarray(spec.r, dtype=float).reshape(len(spec.r), spec.n)

    def _evaluate(self, bits: int) -> float:
        cols = [i - 1 for i in elements_of(bits)]
        if not cols or not self._r.shape[0]:
            return 0.0
        return float(self._r[:, cols].max(axis=1).sum())

    def _evaluate_many(self, indicators: np.ndarray) -> np.ndarray:
        return _row_max_many(self._r, indicators).sum(axis=1)


def preference_oracle(spec: PreferenceSpec) -> PreferenceOracle:
    return PreferenceOracle(spec)


def facility_location_oracle(r) -> FacilityLocationOracle:
    """Accepts an L x n matrix or a FacilitySpec."""
    if not isinstance(r, FacilitySpec):
        matrix = np.asarray(r, dtype=float)
        r = FacilitySpec(n=matrix.shape[1], r=matrix.tolist())
    return FacilityLocationOracle(r)


def facility_as_preference(spec: FacilitySpec) -> PreferenceSpec:
    """Facility location as a preference function: a = 0, u_i = sum_l r_li."""
    r = np.asarray(spec.r, dtype=float).reshape(len(spec.r), spec.n)
    return PreferenceSpec(n=spec.n, u=r.sum(axis=0).tolist(), r=spec.r, a=[])


def preference_exact_ft(spec: PreferenceSpec) -> SparseFT:
    coefficients: Dict[int, float] = defaultdict(float)
    modular = np.asarray(spec.u, dtype=float).copy()
    for row in spec.r:
        modular -= np.asarray(row)
        _max_term_coefficients(row, 1.0, coefficients)
    for row in spec.a:
        modular += np.asarray(row)
        _max_term_coefficients(row, -1.0, coefficients)
    _modular_coefficients(modular.tolist(), coefficients)
    return SparseFT.from_coefficients(spec.n, ModelId.UNION, coefficients)


def facility_location_exact_ft(spec: FacilitySpec) -> SparseFT:
    coefficients: Dict[int, float] = defaultdict(float)
    for row in spec.r:
        _max_term_coefficients(row, 1.0, coefficients)
    return SparseFT.from_coefficients(spec.n, ModelId.UNION, coefficients)

"""
Weighted coverage functions s(A) = w(union of S_i over x_i in A).

The model-4 spectrum is read off the Venn diagram: every universe element
u has a signature B_u = {x_i : u in S_i}, and
  s^(empty) = total covered weight,  s^(B) = -(weight with signature B).
"""

import logging
from collections import defaultdict
from typing import Dict

import numpy as np

from core import ModelId, SetFunctionOracle, SparseFT
from core.subsets import elements_of
from models import CoverageSpec

logger = logging.getLogger(__name__)


class CoverageOracle(SetFunctionOracle):
    """Coverage function over a membership matrix."""

    def __init__(self, spec: CoverageSpec):
        super().__init__(spec.n)
        self.spec = spec
        self._membership = np.zeros((spec.n, spec.universe_size), dtype=bool)
        for i, members in enumerate(spec.membership):
            self._membership[i, list(members)] = True
        self._weights = np.asarray(spec.weights, dtype=float)

    def _evaluate(self, bits: int) -> float:
        rows = [i - 1 for i in elements_of(bits)]
        if not rows:
            return 0.0
        covered = self._membership[rows].any(axis=0)
        return float(self._weights[covered].sum())

    def _evaluate_many(self, indicators: np.ndarray) -> np.ndarray:
        covered = (indicators.astype(np.int32) @ self._membership.astype(np.int32)) > 0
        return covered @ self._weights


def coverage_oracle(spec: CoverageSpec) -> CoverageOracle:
    return CoverageOracle(spec)


def coverage_exact_ft(spec: CoverageSpec) -> SparseFT:
    """Model-4 spectrum by bucketing universe elements by signature, O(|U| n)."""
    signatures = [0] * spec.universe_size
    for i, members in enumerate(spec.membership):
        for u in members:
            signatures[u] |= 1 << i

    coefficients: Dict[int, float] = defaultdict(float)
    covered_weight = 0.0
    for u, signature in enumerate(signatures):
        if signature:
            coefficients[signature] -= spec.weights[u]
            covered_weight += spec.weights[u]
    coefficients[0] = covered_weight
    ft = SparseFT.from_coefficients(spec.n, ModelId.UNION, coefficients)
    logger.debug(f"Coverage spectrum: {ft.k} fragments from |U|={spec.universe_size}")
    return ft

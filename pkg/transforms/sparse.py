"""
Evaluation and restriction of sparse spectra.

Inverse transforms per model, summing only over stored frequencies B:
  model 3: s(A) = sum_{B subset of A} (-1)^|B| s^(B)
  model 4: s(A) = sum_{B disjoint from A} s^(B)
  model 5: s(A) = 2^-|domain| sum_B (-1)^|A & B| s^(B)
"""

import logging
from collections import defaultdict
from typing import Dict, Optional

import numpy as np

from config import evaluation_config
from core import (
    DenseSetFunction,
    InvalidInputError,
    ModelId,
    SetFunctionOracle,
    SparseFT,
    from_lex_rank,
    lex_rank,
    popcount,
)
from core.subsets import (
    as_bits,
    disjoint_matrix,
    indicators_to_words,
    masks_to_words,
    parity_matrix,
    subset_matrix,
)

logger = logging.getLogger(__name__)


def eval_sparse(ft: SparseFT, a) -> float:
    """s(A) from the stored coefficients, O(k)."""
    bits = as_bits(a, ft.n)
    if ft.model == ModelId.UNION:
        return float(sum(v for b, v in ft.items() if not b & bits))
    if ft.model == ModelId.DIFFERENCE:
        return float(sum(-v if popcount(b) & 1 else v for b, v in ft.items() if not b & ~bits))
    total = sum(-v if popcount(b & bits) & 1 else v for b, v in ft.items())
    return float(total) / float(2 ** ft.domain_size)


def eval_sparse_many(ft: SparseFT, indicators: np.ndarray, batch_size: Optional[int] = None) -> np.ndarray:
    """Vectorised eval_sparse over an (S, n) membership matrix."""
    indicators = np.asarray(indicators, dtype=bool)
    if indicators.ndim != 2 or indicators.shape[1] != ft.n:
        raise InvalidInputError(f"Expected a membership matrix with {ft.n} columns, got {indicators.shape}")
    out = np.zeros(indicators.shape[0])
    if ft.k == 0 or indicators.shape[0] == 0:
        return out

    support = masks_to_words(ft.support, ft.n)
    coefs = np.fromiter(ft.entries.values(), dtype=float, count=ft.k)
    if ft.model == ModelId.DIFFERENCE:
        signs = np.array([-1.0 if popcount(b) & 1 else 1.0 for b in ft.support])
        coefs = coefs * signs

    batch_size = batch_size or evaluation_config.batch_size
    for start in range(0, indicators.shape[0], batch_size):
        words = indicators_to_words(indicators[start:start + batch_size])
        if ft.model == ModelId.UNION:
            basis = disjoint_matrix(words, support).astype(float)
        elif ft.model == ModelId.DIFFERENCE:
            basis = subset_matrix(words, support).astype(float)
        else:
            basis = 1.0 - 2.0 * parity_matrix(words, support)
        out[start:start + batch_size] = basis @ coefs
    if ft.model == ModelId.WHT:
        out /= float(2 ** ft.domain_size)
    return out


def restrict_ft(ft: SparseFT, m, model) -> SparseFT:
    """
    Spectrum of the function restricted to the subsets of M.

    Each stored B contributes to B & M; model 3 signs it by the parity of
    the part outside M and model 5 scales by 2^-(|domain| - |M|). Exact
    zeros are dropped. For model 3 the restricted function is
    C -> s(M^c | C).
    """
    model = ModelId.parse(model)
    if model != ft.model:
        raise InvalidInputError(f"Spectrum is model {int(ft.model)}, restriction requested for model {int(model)}")
    m_bits = as_bits(m, ft.n)
    if m_bits & ~ft.domain:
        raise InvalidInputError("Restriction set must lie within the spectrum's domain")

    outside = ft.domain & ~m_bits
    sums: Dict[int, float] = defaultdict(float)
    for b, v in ft.items():
        if model == ModelId.DIFFERENCE and popcount(b & outside) & 1:
            v = -v
        sums[b & m_bits] += v
    if model == ModelId.WHT:
        scale = 2.0 ** -popcount(outside)
        sums = {b: v * scale for b, v in sums.items()}
    return SparseFT.from_coefficients(ft.n, model, sums, domain=m_bits)


def sparse_to_dense(ft: SparseFT) -> DenseSetFunction:
    """Coefficient vector indexed by frequency rank."""
    values = np.zeros(1 << ft.n)
    for b, v in ft.items():
        values[lex_rank(b, ft.n)] = v
    return DenseSetFunction(ft.n, values)


def dense_to_sparse(coeffs: DenseSetFunction, model, tolerance: float = 0.0) -> SparseFT:
    nonzero = np.flatnonzero(np.abs(coeffs.values) > tolerance)
    entries = {from_lex_rank(int(r), coeffs.n): float(coeffs.values[r]) for r in nonzero}
    return SparseFT(coeffs.n, model, entries)


class SparseOracle(SetFunctionOracle):
    """Oracle evaluating a sparse spectrum, O(k) per query."""

    def __init__(self, ft: SparseFT):
        super().__init__(ft.n)
        self.ft = ft

    def _evaluate(self, bits: int) -> float:
        return eval_sparse(self.ft, bits)

    def _evaluate_many(self, indicators: np.ndarray) -> np.ndarray:
        return eval_sparse_many(self.ft, indicators)

"""
Dense convolution, used as the reference path in tests.

(h * s)(A) = sum_Q h(Q) s(A shifted by Q), computed directly in
O(2^n * |supp h|) or through the convolution theorem.
"""

import numpy as np

from core import DenseSetFunction, InvalidInputError, ModelId
from core.subsets import from_lex_rank, lex_rank
from transforms import dense_ft, dense_ift
from .one_hop import OneHopFilter


def _rank_tables(n: int):
    masks = np.array([from_lex_rank(r, n) for r in range(1 << n)], dtype=np.int64)
    rank_of = np.empty(1 << n, dtype=np.int64)
    rank_of[masks] = np.arange(1 << n, dtype=np.int64)
    return masks, rank_of


def shift(a: np.ndarray, q: int, model) -> np.ndarray:
    """Apply the model's shift by Q to an array of masks."""
    model = ModelId.parse(model)
    if model == ModelId.UNION:
        return a | q
    if model == ModelId.DIFFERENCE:
        return a & ~q
    return a ^ q


def dense_convolve(h: DenseSetFunction, s: DenseSetFunction, model) -> DenseSetFunction:
    if h.n != s.n:
        raise InvalidInputError(f"Filter is over n={h.n}, signal over n={s.n}")
    masks, rank_of = _rank_tables(s.n)
    out = np.zeros(1 << s.n)
    for q_rank in np.flatnonzero(h.values):
        q = int(masks[q_rank])
        out += h.values[q_rank] * s.values[rank_of[shift(masks, q, model)]]
    return DenseSetFunction(s.n, out)


def dense_frequency_response(h: DenseSetFunction, model) -> DenseSetFunction:
    """
    Frequency response of an arbitrary dense filter, indexed by frequency rank.

    Models 3 and 4 share sum_{A disjoint from B} h(A), i.e. the model-4
    inverse applied to h; model 5 uses the unnormalised WHT of h.
    """
    model = ModelId.parse(model)
    if model == ModelId.WHT:
        return dense_ft(h, ModelId.WHT)
    return dense_ift(h, ModelId.UNION)


def spectral_convolve(h: DenseSetFunction, s: DenseSetFunction, model) -> DenseSetFunction:
    response = dense_frequency_response(h, model)
    spectrum = dense_ft(s, model)
    return dense_ift(DenseSetFunction(s.n, response.values * spectrum.values), model)


def one_hop_to_dense(h: OneHopFilter) -> DenseSetFunction:
    values = np.zeros(1 << h.n)
    values[0] = h.base
    for i, c in enumerate(h.singleton_coeffs):
        values[lex_rank(1 << i, h.n)] = c
    return DenseSetFunction(h.n, values)

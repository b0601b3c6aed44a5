"""Random k-Fourier-sparse set functions with known ground truth."""

import logging
from typing import Optional, Tuple

import numpy as np

from core import InvalidInputError, ModelId, SparseFT, make_rng, resolve_seed
from core.subsets import sample_distinct_masks
from models import CoefficientDistribution, RandomSparseSpec
from transforms import SparseOracle

logger = logging.getLogger(__name__)


def _draw_coefficients(rng: np.random.Generator, k: int, distribution: CoefficientDistribution) -> np.ndarray:
    def draw(size: int) -> np.ndarray:
        if distribution == CoefficientDistribution.UNIFORM:
            return rng.uniform(-1.0, 1.0, size)
        if distribution == CoefficientDistribution.RADEMACHER:
            return rng.choice([-1.0, 1.0], size)
        return rng.standard_normal(size)

    values = draw(k)
    zeros = values == 0.0
    while zeros.any():
        values[zeros] = draw(int(zeros.sum()))
        zeros = values == 0.0
    return values


def random_sparse_ft(
    n: int,
    k: int,
    model=ModelId.UNION,
    coeff_dist=CoefficientDistribution.NORMAL,
    seed: Optional[int] = None,
) -> SparseFT:
    """Support uniform without replacement, coefficients i.i.d. and nonzero."""
    if k < 1 or (n < 63 and k > 1 << n):
        raise InvalidInputError(f"Need 1 <= k <= 2^n, got k={k}, n={n}")
    rng = make_rng(seed)
    support = sample_distinct_masks(rng, n, k)
    coefficients = _draw_coefficients(rng, k, CoefficientDistribution(coeff_dist))
    return SparseFT(n, model, dict(zip(support, coefficients.tolist())))


def random_sparse_oracle(
    n: int,
    k: int,
    model=ModelId.UNION,
    coeff_dist=CoefficientDistribution.NORMAL,
    seed: Optional[int] = None,
) -> Tuple[SparseOracle, SparseFT]:
    """Oracle evaluating a random spectrum in O(k) per query, plus the spectrum."""
    seed = resolve_seed(seed)
    ft = random_sparse_ft(n, k, model, coeff_dist, seed)
    logger.debug(f"Random {k}-sparse model-{int(ft.model)} function on n={n} (seed={seed})")
    return SparseOracle(ft), ft


def random_sparse_from_spec(spec: RandomSparseSpec) -> Tuple[SparseOracle, SparseFT]:
    return random_sparse_oracle(spec.n, spec.k, spec.model, spec.coeff_dist, spec.seed)

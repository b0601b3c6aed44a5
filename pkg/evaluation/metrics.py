"""
Sampled reconstruction error.
"""

import logging
from typing import Optional

import numpy as np

from config import evaluation_config
from core import InvalidInputError, SetFunctionOracle, SparseFT, UndefinedErrorEstimate, make_rng, resolve_seed
from core.subsets import random_indicators
from models import ErrorEstimate
from transforms import eval_sparse_many

logger = logging.getLogger(__name__)


def sample_sets(num_samples: int, n: int, seed: int) -> np.ndarray:
    """Uniform random subsets as an (S, n) membership matrix."""
    return random_indicators(make_rng(seed), num_samples, n)


def relative_error(
    truth: SetFunctionOracle,
    estimate: SparseFT,
    num_samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> ErrorEstimate:
    """
    ||p_A - p'_A|| / ||p_A|| over uniformly sampled sets A.

    Queries go to a clone of truth, so the caller's counter is untouched.
    Raises UndefinedErrorEstimate when truth vanishes on every sample.
    """
    num_samples = num_samples or evaluation_config.num_samples
    if num_samples < 1:
        raise InvalidInputError(f"num_samples must be positive, got {num_samples}")
    if truth.n != estimate.n:
        raise InvalidInputError(f"Truth is over n={truth.n} but the estimate over n={estimate.n}")

    seed = resolve_seed(seed)
    sets = sample_sets(num_samples, truth.n, seed)
    oracle = truth.clone()
    batch = evaluation_config.batch_size
    truth_values = np.concatenate([oracle.eval_many(sets[i:i + batch]) for i in range(0, num_samples, batch)])
    estimate_values = eval_sparse_many(estimate, sets)

    truth_norm = float(np.linalg.norm(truth_values))
    residual_norm = float(np.linalg.norm(truth_values - estimate_values))
    if truth_norm == 0.0:
        raise UndefinedErrorEstimate(f"Truth is zero on all {num_samples} sampled sets (seed {seed})")

    error = residual_norm / truth_norm
    logger.debug(f"Relative error {error:.3e} over {num_samples} samples (seed {seed})")
    return ErrorEstimate(
        relative_error=error,
        num_samples=num_samples,
        seed=seed,
        truth_norm=truth_norm,
        residual_norm=residual_norm,
    )

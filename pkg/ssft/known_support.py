"""
Coefficient recovery when the Fourier support is known.

Model 4 queries s at N \ B_j; the system matrix has entries
[(N \ B_j) disjoint from B_l] = [B_l subset of B_j], which is unit lower
triangular once the support is sorted by (cardinality, rank).
Model 3 queries s at B_j; the entries are (-1)^|B_l| [B_l subset of B_j],
lower triangular with a +-1 diagonal.
Model 5 fits the restricted WHT on random subsets by least squares.
"""

import logging
import math
from typing import Callable, Iterable, List, Optional, Sequence

import numpy as np
from scipy import linalg

from config import ssft_settings
from core import (
    InvalidInputError,
    ModelId,
    RecoveryError,
    SetFunctionOracle,
    SparseFT,
    full_bits,
    make_rng,
    order_key,
    popcount,
)
from core.subsets import as_bits, masks_to_words, parity_matrix, sample_distinct_masks, subset_matrix

logger = logging.getLogger(__name__)


def triangular_system(support: Sequence[int], n: int, model) -> np.ndarray:
    """System matrix for a support sorted by order_key."""
    model = ModelId.parse(model)
    words = masks_to_words(support, n)
    matrix = subset_matrix(words, words).astype(float)
    if model == ModelId.DIFFERENCE:
        signs = np.array([-1.0 if popcount(b) & 1 else 1.0 for b in support])
        matrix *= signs[None, :]
    return matrix


def solve_triangular_system(matrix: np.ndarray, rhs: np.ndarray, model, support: Sequence[int]) -> np.ndarray:
    try:
        return linalg.solve_triangular(
            matrix, rhs, lower=True, unit_diagonal=ModelId.parse(model) == ModelId.UNION
        )
    except (linalg.LinAlgError, ValueError) as e:
        raise RecoveryError(f"Triangular system could not be solved: {e}", support=support) from e


def solve_wht_least_squares(
    query: Callable[[int], float],
    candidates: Sequence[int],
    width: int,
    n: int,
    oversampling: float,
    rng: np.random.Generator,
    max_resamples: Optional[int] = None,
    known_rows: Iterable[int] = (),
) -> np.ndarray:
    """
    Least-squares fit of the WHT coefficients of s restricted to
    {x_1, ..., x_width}.

    Rows are every subset of {x_1, ..., x_width} in known_rows (queries made
    earlier) topped up with distinct random subsets to ceil(oversampling * k).
    While the system is rank deficient another ceil(oversampling * k) fresh
    rows are added, up to max_resamples times; once every subset of the
    prefix is a row the system has full column rank.
    """
    max_resamples = ssft_settings.max_resamples if max_resamples is None else max_resamples
    k = len(candidates)
    universe = 1 << width
    batch = min(math.ceil(oversampling * k), universe)
    columns = masks_to_words(candidates, n)

    rows = [a for a in dict.fromkeys(known_rows) if 0 <= a < universe]
    taken = set(rows)
    rows += _fresh_masks(rng, width, batch - len(rows), taken)
    values = [query(a) for a in rows]

    for attempt in range(max_resamples + 1):
        signs = 1.0 - 2.0 * parity_matrix(masks_to_words(rows, n), columns)
        solution, _, rank, _ = linalg.lstsq(signs, np.array(values))
        if rank == k:
            return solution * float(universe)
        if len(rows) == universe or attempt == max_resamples:
            break
        logger.warning(
            f"Least-squares system rank {rank} < {k} on {len(rows)} rows at width {width}; "
            f"adding rows (round {attempt + 1} of {max_resamples})"
        )
        fresh = _fresh_masks(rng, width, min(batch, universe - len(rows)), taken)
        rows += fresh
        values += [query(a) for a in fresh]
    raise RecoveryError(
        f"Least-squares system stayed rank deficient at width {width} with {len(rows)} rows",
        support=candidates,
    )


def _fresh_masks(rng: np.random.Generator, width: int, count: int, taken: set) -> List[int]:
    """count distinct random subsets of {x_1, ..., x_width} outside taken; taken is updated."""
    universe = 1 << width
    count = min(max(count, 0), universe - len(taken))
    if count == 0:
        return []
    if universe <= max(4 * (count + len(taken)), 64):
        pool = np.array([a for a in range(universe) if a not in taken])
        out = [int(a) for a in rng.choice(pool, size=count, replace=False)]
    else:
        out = []
        while len(out) < count:
            for a in sample_distinct_masks(rng, width, count - len(out)):
                if a not in taken and a not in out:
                    out.append(a)
    taken.update(out)
    return out


def solve_known_support(
    s: SetFunctionOracle,
    support: Iterable,
    model,
    ls_oversampling: Optional[float] = None,
    seed: Optional[int] = None,
) -> SparseFT:
    """Recover the coefficients on a known support from |support| (models 3/4) queries."""
    model = ModelId.parse(model)
    n = s.n
    masks = sorted({as_bits(b, n) for b in support}, key=lambda b: order_key(b, n))
    if not masks:
        raise InvalidInputError("Support must be nonempty")

    if model == ModelId.WHT:
        oversampling = ssft_settings.ls_oversampling if ls_oversampling is None else ls_oversampling
        coefs = solve_wht_least_squares(s.eval, masks, n, n, oversampling, make_rng(seed))
    else:
        full = full_bits(n)
        points = [full & ~b for b in masks] if model == ModelId.UNION else masks
        values = np.array([s.eval(a) for a in points])
        coefs = solve_triangular_system(triangular_system(masks, n, model), values, model, masks)

    logger.debug(f"Known-support solve for model {int(model)}, k={len(masks)}, n={n}")
    return SparseFT.from_coefficients(n, model, dict(zip(masks, coefs)))

"""
Random instance builders standing in for the unavailable real datasets.
"""

import logging
from typing import Optional

import numpy as np

from core import InvalidInputError, make_rng
from models import CoverageSpec, FacilitySpec, InformationGainSpec, PreferenceSpec

logger = logging.getLogger(__name__)


def random_coverage_spec(
    n: int,
    universe_size: int,
    seed: Optional[int] = None,
    density: float = 0.3,
    signed: bool = False,
) -> CoverageSpec:
    """Each element covers each universe item with probability density; sets kept distinct."""
    if universe_size < 63 and (1 << universe_size) < n:
        raise InvalidInputError(f"A universe of {universe_size} items cannot hold {n} distinct sets")
    rng = make_rng(seed)
    membership = []
    seen = set()
    while len(membership) < n:
        members = frozenset(np.flatnonzero(rng.random(universe_size) < density).tolist())
        if members not in seen:
            seen.add(members)
            membership.append(sorted(members))
    if signed:
        weights = rng.standard_normal(universe_size)
    else:
        weights = rng.random(universe_size)
    return CoverageSpec(n=n, universe_size=universe_size, membership=membership, weights=weights.tolist())


def _tie_free_rows(rng: np.random.Generator, rows: int, n: int) -> np.ndarray:
    matrix = rng.random((rows, n))
    for row in matrix:
        while len(set(row.tolist())) < n:
            row[:] = rng.random(n)
    return matrix


def random_preference_spec(n: int, L: int, K: int, seed: Optional[int] = None) -> PreferenceSpec:
    """u ~ N(0, 1); r, a ~ U[0, 1) with strictly distinct entries per row."""
    rng = make_rng(seed)
    u = rng.standard_normal(n)
    r = _tie_free_rows(rng, L, n)
    a = _tie_free_rows(rng, K, n)
    return PreferenceSpec(n=n, u=u.tolist(), r=r.tolist(), a=a.tolist())


def random_facility_spec(n: int, L: int, seed: Optional[int] = None, sparsity: float = 0.0) -> FacilitySpec:
    """r ~ U[0, 1); each entry zeroed independently with probability sparsity."""
    if not 0.0 <= sparsity < 1.0:
        raise InvalidInputError(f"Sparsity must lie in [0, 1), got {sparsity}")
    rng = make_rng(seed)
    r = rng.random((L, n))
    if sparsity:
        r[rng.random((L, n)) < sparsity] = 0.0
    return FacilitySpec(n=n, r=r.tolist())


def random_covariance(n: int, seed: Optional[int] = None, delta: float = 1e-6) -> np.ndarray:
    """K = G G^T + delta I with G standard normal."""
    g = make_rng(seed).standard_normal((n, n))
    return g @ g.T + delta * np.eye(n)


def random_information_gain_spec(n: int, seed: Optional[int] = None, sigma: float = 1.0) -> InformationGainSpec:
    covariance = random_covariance(n, seed)
    covariance = (covariance + covariance.T) / 2.0
    return InformationGainSpec(n=n, covariance=covariance.tolist(), sigma=sigma)

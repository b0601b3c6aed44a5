"""Seeded random number generation (counter-based Philox bit generator)."""

from typing import Optional

import numpy as np


def resolve_seed(seed: Optional[int]) -> int:
    """Return seed, drawing and recording a fresh one when it is None."""
    if seed is None:
        return int(np.random.SeedSequence().entropy % (1 << 63))
    return int(seed)


def make_rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(resolve_seed(seed)))

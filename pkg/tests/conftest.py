"""
Pytest configuration and fixtures for Set Function Fourier Toolkit tests.
"""

import pytest
from pathlib import Path
import tempfile
import shutil

import numpy as np

import sys
sys.path.insert(0, str(Path(__file__).parent.parent))

from core import DenseSetFunction, ModelId, make_rng
from models import CoverageSpec, FacilitySpec, GraphSpec


# Cut function of the unit-weight path x1 - x2 - x3 in lexicographic order
PATH3_CUT_VALUES = [0.0, 1.0, 2.0, 1.0, 1.0, 2.0, 1.0, 0.0]

# Its model-4 spectrum in lexicographic frequency order
PATH3_CUT_SPECTRUM = [0.0, 1.0, 2.0, -2.0, 1.0, 0.0, -2.0, 0.0]


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test outputs."""
    temp = tempfile.mkdtemp()
    yield Path(temp)
    shutil.rmtree(temp, ignore_errors=True)


@pytest.fixture
def path3() -> GraphSpec:
    """Unit-weight path 1 - 2 - 3."""
    return GraphSpec(n=3, edges=[(1, 2, 1.0), (2, 3, 1.0)], name="path3")


@pytest.fixture
def path3_cut() -> DenseSetFunction:
    return DenseSetFunction(3, np.array(PATH3_CUT_VALUES))


@pytest.fixture
def path3_spectrum() -> DenseSetFunction:
    return DenseSetFunction(3, np.array(PATH3_CUT_SPECTRUM))


def all_cover_one_spec(n: int) -> CoverageSpec:
    """One weighted universe item covered by every set; padding items weigh 0."""
    return CoverageSpec(
        n=n,
        universe_size=n + 1,
        membership=[[0, i] for i in range(1, n + 1)],
        weights=[1.0] + [0.0] * n,
    )


@pytest.fixture
def all_cover_one():
    """Factory for the all-cover-one coverage instance."""
    return all_cover_one_spec


@pytest.fixture
def small_facility() -> FacilitySpec:
    """Two locations' utilities over 4 candidate sites."""
    return FacilitySpec(n=4, r=[[0.1, 0.7, 0.3, 0.5], [0.9, 0.2, 0.4, 0.6]])


@pytest.fixture
def rng():
    return make_rng(12345)


def random_dense(rng, n: int) -> DenseSetFunction:
    return DenseSetFunction(n, rng.standard_normal(1 << n))


@pytest.fixture
def models():
    return [ModelId.DIFFERENCE, ModelId.UNION, ModelId.WHT]

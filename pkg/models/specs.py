"""
Set function family specifications.

Each spec is a JSON-serialisable description from which generators build an
oracle (and, when a closed form exists, the exact spectrum). The family tag
discriminates the union used for spec files.
"""

import math
from enum import Enum
from typing import Annotated, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, TypeAdapter, model_validator

from core import ModelId


def _check_matrix(rows: List[List[float]], n: int, name: str, non_negative: bool) -> None:
    for row in rows:
        if len(row) != n:
            raise ValueError(f"Every row of {name} must have {n} entries")
        for value in row:
            if not math.isfinite(value):
                raise ValueError(f"{name} entries must be finite")
            if non_negative and value < 0:
                raise ValueError(f"{name} entries must be non-negative")


class CoefficientDistribution(str, Enum):
    """Distribution of random Fourier coefficients."""
    NORMAL = "normal"
    UNIFORM = "uniform"
    RADEMACHER = "rademacher"


class CoverageSpec(BaseModel):
    """Weighted coverage: s(A) = weight of the union of S_i over x_i in A."""

    family: Literal["coverage"] = "coverage"
    n: int = Field(ge=1)
    universe_size: int = Field(ge=1)
    membership: List[List[int]] = Field(description="S_i as 0-based universe indices, one list per element")
    weights: List[float] = Field(description="Signed weight per universe element")

    @model_validator(mode="after")
    def check_spec(self) -> "CoverageSpec":
        if len(self.membership) != self.n:
            raise ValueError(f"Expected {self.n} member sets, got {len(self.membership)}")
        if len(self.weights) != self.universe_size:
            raise ValueError(f"Expected {self.universe_size} weights, got {len(self.weights)}")
        if not all(math.isfinite(w) for w in self.weights):
            raise ValueError("Weights must be finite")
        for members in self.membership:
            if any(not 0 <= u < self.universe_size for u in members):
                raise ValueError("Member indices must lie in the universe")
        distinct = {frozenset(members) for members in self.membership}
        if len(distinct) != self.n:
            raise ValueError("Member sets must be distinct")
        return self


class PreferenceSpec(BaseModel):
    """Modular part u, repulsive rows r (L x n) and attractive rows a (K x n)."""

    family: Literal["preference"] = "preference"
    n: int = Field(ge=1)
    u: List[float]
    r: List[List[float]] = Field(default_factory=list)
    a: List[List[float]] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_spec(self) -> "PreferenceSpec":
        if len(self.u) != self.n:
            raise ValueError(f"Expected {self.n} modular weights, got {len(self.u)}")
        _check_matrix([self.u], self.n, "u", non_negative=False)
        _check_matrix(self.r, self.n, "r", non_negative=True)
        _check_matrix(self.a, self.n, "a", non_negative=True)
        return self

    @property
    def L(self) -> int:
        return len(self.r)

    @property
    def K(self) -> int:
        return len(self.a)


class FacilitySpec(BaseModel):
    """Facility location: s(A) = sum over rows of max_{i in A} r_li."""

    family: Literal["facility"] = "facility"
    n: int = Field(ge=1)
    r: List[List[float]]

    @model_validator(mode="after")
    def check_spec(self) -> "FacilitySpec":
        _check_matrix(self.r, self.n, "r", non_negative=True)
        return self


class GraphSpec(BaseModel):
    """Simple undirected weighted graph; edges use 1-based vertex indices."""

    family: Literal["cut"] = "cut"
    n: int = Field(ge=1)
    edges: List[Tuple[int, int, float]] = Field(default_factory=list)
    name: Optional[str] = None

    @model_validator(mode="after")
    def check_spec(self) -> "GraphSpec":
        seen = set()
        for i, j, w in self.edges:
            if i == j:
                raise ValueError(f"Self loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"Edge ({i}, {j}) outside 1..{self.n}")
            if not math.isfinite(w):
                raise ValueError("Edge weights must be finite")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"Duplicate edge {key}")
            seen.add(key)
        return self


class RandomSparseSpec(BaseModel):
    """k-sparse function with random support and coefficients."""

    family: Literal["random-sparse"] = "random-sparse"
    n: int = Field(ge=1)
    k: int = Field(ge=1)
    model: ModelId = ModelId.UNION
    coeff_dist: CoefficientDistribution = CoefficientDistribution.NORMAL
    seed: int = 0

    @model_validator(mode="after")
    def check_spec(self) -> "RandomSparseSpec":
        if self.n < 63 and self.k > 1 << self.n:
            raise ValueError(f"k={self.k} exceeds 2^n={1 << self.n}")
        return self


class InformationGainSpec(BaseModel):
    """G(A) = 1/2 log det(I + sigma^-2 K_AA)."""

    family: Literal["infogain"] = "infogain"
    n: int = Field(ge=1)
    covariance: List[List[float]]
    sigma: float = Field(default=1.0, gt=0)

    @model_validator(mode="after")
    def check_spec(self) -> "InformationGainSpec":
        if len(self.covariance) != self.n:
            raise ValueError(f"Covariance must be {self.n} x {self.n}")
        _check_matrix(self.covariance, self.n, "covariance", non_negative=False)
        for i in range(self.n):
            for j in range(i):
                if not math.isclose(self.covariance[i][j], self.covariance[j][i], rel_tol=1e-9, abs_tol=1e-12):
                    raise ValueError("Covariance must be symmetric")
        return self


FunctionSpec = Annotated[
    Union[CoverageSpec, PreferenceSpec, FacilitySpec, GraphSpec, RandomSparseSpec, InformationGainSpec],
    Field(discriminator="family"),
]

FUNCTION_SPEC_ADAPTER = TypeAdapter(FunctionSpec)

FAMILIES = ("coverage", "preference", "facility", "cut", "random-sparse", "infogain")

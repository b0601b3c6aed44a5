"""
Run configuration and result records for learners and experiments.
"""

import math
from enum import Enum
from typing import Annotated, Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, WithJsonSchema, field_serializer, field_validator

from config import evaluation_config, ssft_settings
from core import ModelId, SparseFT


class ValidationStatus(str, Enum):
    """Validation status for recovered spectra."""
    OK = "OK"
    FLAG = "FLAG"
    PENDING = "PENDING"


class CoefficientEntry(BaseModel):
    set: List[int] = Field(description="Sorted 1-based element indices; [] is the empty set")
    value: float


class SparseFTDocument(BaseModel):
    """JSON layout of a sparse spectrum."""

    n: int = Field(ge=1)
    model: Literal[3, 4, 5]
    coefficients: List[CoefficientEntry]
    domain: Optional[List[int]] = Field(default=None, description="Ground set after restriction; omitted when it is N")


def query_bound(n: int, k: int, slack: int = 2) -> Optional[float]:
    """n*k - k*log2(k) + slack*k; None for the empty spectrum."""
    if k < 1:
        return None
    return n * k - k * math.log2(k) + slack * k


class SsftConfig(BaseModel):
    """Hyperparameters of one SSFT / SSFT+ run."""

    model: ModelId = ModelId.UNION
    epsilon: float = Field(
        default_factory=lambda: ssft_settings.epsilon,
        ge=0.0,
        description="Recovered coefficients with |value| < epsilon are treated as zero"
    )
    k_max: int = Field(
        default_factory=lambda: ssft_settings.k_max,
        ge=1,
        description="Support-size cap per chain step"
    )
    seed: Optional[int] = Field(default=None, description="Filter seed (SSFT+ only)")
    ls_oversampling: float = Field(default_factory=lambda: ssft_settings.ls_oversampling, ge=1.0)
    keep_root: bool = Field(
        default_factory=lambda: ssft_settings.keep_root,
        description="Keep the empty set in the step-0 support even if s(empty) is below epsilon"
    )
    frequency_guard: float = Field(default_factory=lambda: ssft_settings.frequency_guard, gt=0.0)

    @classmethod
    def for_experiments(cls, model: Any = ModelId.UNION, **overrides) -> "SsftConfig":
        """Experiment-mode defaults (looser zero threshold)."""
        values = {"model": model, "epsilon": ssft_settings.experiment_epsilon}
        values.update(overrides)
        return cls(**values)


class SsftReport(BaseModel):
    """Recovered spectrum plus per-run accounting."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    result: Annotated[SparseFT, WithJsonSchema(SparseFTDocument.model_json_schema())]
    queries_used: int = Field(ge=0)
    support_sizes_per_step: List[int]
    truncated: bool = False
    seed_used: Optional[int] = None
    model: ModelId
    epsilon: float
    k_max: int
    solve_ops_estimate: int = Field(
        default=0,
        ge=0,
        description="Sum over steps of 2*|B_(i-1)|^2; deterministic stand-in for the wall-clock solve work"
    )
    query_bound: Optional[float] = None
    query_bound_main: Optional[float] = None

    @field_validator("result", mode="before")
    @classmethod
    def parse_result(cls, value: Any) -> Any:
        if isinstance(value, dict):
            return SparseFT.from_json_dict(value)
        return value

    @field_validator("support_sizes_per_step")
    @classmethod
    def check_sizes(cls, value: List[int]) -> List[int]:
        if any(size < 0 for size in value):
            raise ValueError("Support sizes must be non-negative")
        return value

    @field_serializer("result")
    def serialize_result(self, result: SparseFT) -> Dict[str, Any]:
        return result.to_json_dict()

    @property
    def k(self) -> int:
        return self.result.k

    @property
    def within_query_bound(self) -> bool:
        return self.query_bound is None or self.queries_used <= self.query_bound + 1e-9


class ErrorEstimate(BaseModel):
    """Sampled relative reconstruction error ||p - p'|| / ||p||."""

    relative_error: float = Field(ge=0.0)
    num_samples: int = Field(ge=1)
    seed: int
    truth_norm: float = Field(default=0.0, ge=0.0)
    residual_norm: float = Field(default=0.0, ge=0.0)


class GreedyResult(BaseModel):
    """Greedy selection under a cardinality constraint."""

    selection: List[int] = Field(description="Selected 1-based element indices, in pick order")
    value: float
    evaluations: int = Field(ge=0)
    lazy: bool = False


class ExperimentTask(BaseModel):
    """One experiment: family -> learner -> error / greedy, over repetitions."""

    oracle: str = Field(description="Compact oracle spec, seeded per repetition")
    learner: Literal["ssft", "ssft_plus"] = "ssft"
    model: ModelId = ModelId.UNION
    repetitions: int = Field(default=1, ge=1)
    seed: int = 0
    num_samples: int = Field(default_factory=lambda: evaluation_config.num_samples, ge=1)
    epsilon: Optional[float] = Field(default=None, ge=0.0)
    k_max: Optional[int] = Field(default=None, ge=1)
    keep_root: Optional[bool] = None
    ls_oversampling: Optional[float] = Field(default=None, ge=1.0)
    greedy_d: Optional[int] = Field(default=None, ge=1)
    lazy_greedy: bool = Field(default_factory=lambda: evaluation_config.lazy_greedy)
    workers: int = Field(default_factory=lambda: evaluation_config.max_workers, ge=1)

    def ssft_config(self, seed: int, keep_root_default: bool = False) -> SsftConfig:
        """Experiment-mode config; keep_root falls back to the family's default when unset."""
        overrides = {
            key: value
            for key, value in {
                "epsilon": self.epsilon,
                "k_max": self.k_max,
                "ls_oversampling": self.ls_oversampling,
            }.items()
            if value is not None
        }
        keep_root = keep_root_default if self.keep_root is None else self.keep_root
        return SsftConfig.for_experiments(self.model, seed=seed, keep_root=keep_root, **overrides)


class ExperimentRow(BaseModel):
    """One repetition of an experiment."""

    rep: int
    seed: int
    queries: int = 0
    time_ms: float = 0.0
    k: int = 0
    rel_error: Optional[float] = None
    greedy_true: Optional[float] = None
    greedy_surrogate: Optional[float] = None
    greedy_random: Optional[float] = None
    truncated: bool = False
    validation_flag: ValidationStatus = ValidationStatus.PENDING
    notes: Optional[str] = None
    error: Optional[str] = None

    @property
    def succeeded(self) -> bool:
        return self.error is None


class ExperimentSummary(BaseModel):
    """Means over the successful repetitions of an experiment."""

    repetitions: int
    failures: int
    mean_queries: Optional[float] = None
    mean_time_ms: Optional[float] = None
    mean_k: Optional[float] = None
    mean_rel_error: Optional[float] = None
    mean_greedy_true: Optional[float] = None
    mean_greedy_surrogate: Optional[float] = None
    mean_greedy_random: Optional[float] = None

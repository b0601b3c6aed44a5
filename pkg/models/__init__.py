"""Data models for the Set Function Fourier Toolkit."""

from .ground_set import GroundSet
from .specs import (
    CoefficientDistribution,
    CoverageSpec,
    PreferenceSpec,
    FacilitySpec,
    GraphSpec,
    RandomSparseSpec,
    InformationGainSpec,
    FunctionSpec,
    FUNCTION_SPEC_ADAPTER,
    FAMILIES,
)
from .results import (
    ValidationStatus,
    CoefficientEntry,
    SparseFTDocument,
    SsftConfig,
    SsftReport,
    ErrorEstimate,
    GreedyResult,
    ExperimentTask,
    ExperimentRow,
    ExperimentSummary,
    query_bound,
)

__all__ = [
    "GroundSet",
    "CoefficientDistribution",
    "CoverageSpec",
    "PreferenceSpec",
    "FacilitySpec",
    "GraphSpec",
    "RandomSparseSpec",
    "InformationGainSpec",
    "FunctionSpec",
    "FUNCTION_SPEC_ADAPTER",
    "FAMILIES",
    "ValidationStatus",
    "CoefficientEntry",
    "SparseFTDocument",
    "SsftConfig",
    "SsftReport",
    "ErrorEstimate",
    "GreedyResult",
    "ExperimentTask",
    "ExperimentRow",
    "ExperimentSummary",
    "query_bound",
]

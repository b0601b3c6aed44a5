"""Set function families, their exact spectra and the oracle-spec registry."""

from .coverage import CoverageOracle, coverage_oracle, coverage_exact_ft
from .preference import (
    PreferenceOracle,
    FacilityLocationOracle,
    preference_oracle,
    facility_location_oracle,
    facility_as_preference,
    preference_exact_ft,
    facility_location_exact_ft,
)
from .graphs import (
    CutOracle,
    graph_cut_oracle,
    graph_cut_exact_ft,
    path_graph,
    star_graph,
    cycle_graph,
    complete_graph,
    random_graph,
)
from .random_sparse import random_sparse_ft, random_sparse_oracle
from .information_gain import InformationGainOracle, information_gain_oracle
from .synthetic import (
    random_coverage_spec,
    random_preference_spec,
    random_facility_spec,
    random_covariance,
    random_information_gain_spec,
)
from .registry import (
    parse_oracle_spec,
    build_oracle,
    exact_ft,
    resolve_oracle,
    load_spec_file,
    default_keep_root,
)

__all__ = [
    "CoverageOracle",
    "coverage_oracle",
    "coverage_exact_ft",
    "PreferenceOracle",
    "FacilityLocationOracle",
    "preference_oracle",
    "facility_location_oracle",
    "facility_as_preference",
    "preference_exact_ft",
    "facility_location_exact_ft",
    "CutOracle",
    "graph_cut_oracle",
    "graph_cut_exact_ft",
    "path_graph",
    "star_graph",
    "cycle_graph",
    "complete_graph",
    "random_graph",
    "random_sparse_ft",
    "random_sparse_oracle",
    "InformationGainOracle",
    "information_gain_oracle",
    "random_coverage_spec",
    "random_preference_spec",
    "random_facility_spec",
    "random_covariance",
    "random_information_gain_spec",
    "parse_oracle_spec",
    "build_oracle",
    "exact_ft",
    "resolve_oracle",
    "load_spec_file",
    "default_keep_root",
]

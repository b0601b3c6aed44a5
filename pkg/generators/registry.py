"""
Compact oracle spec strings and spec files.

  cut:path3                     named graph with vertex count suffix
  cut:random:n=8,p=0.5          Erdos-Renyi graph
  random-sparse:n=10,k=8        optional model=, dist=, seed=
  coverage:n=6,universe=10      optional density=, signed=
  preference:n=6,L=2,K=1
  facility:n=20,L=10            optional sparsity=
  infogain:n=6                  optional sigma=
  @spec.json / spec.json        spec file written by `generate`
"""

import logging
import re
from typing import Any, Dict, Optional, Tuple

from pydantic import ValidationError

from core import InvalidInputError, SetFunctionOracle, SparseFT
from export.formats import read_spec
from models import (
    CoverageSpec,
    FacilitySpec,
    FunctionSpec,
    GraphSpec,
    InformationGainSpec,
    PreferenceSpec,
    RandomSparseSpec,
)

from .coverage import coverage_exact_ft, coverage_oracle
from .graphs import NAMED_GRAPHS, graph_cut_exact_ft, graph_cut_oracle, random_graph
from .information_gain import information_gain_oracle
from .preference import facility_location_exact_ft, facility_location_oracle, preference_exact_ft, preference_oracle
from .random_sparse import random_sparse_from_spec
from .synthetic import (
    random_coverage_spec,
    random_facility_spec,
    random_information_gain_spec,
    random_preference_spec,
)

logger = logging.getLogger(__name__)

_NAMED_GRAPH = re.compile(r"^([a-z]+)(\d+)$")


def _coerce(value: str) -> Any:
    lowered = value.lower()
    if lowered in ("true", "false"):
        return lowered == "true"
    for cast in (int, float):
        try:
            return cast(value)
        except ValueError:
            continue
    return value


def _parse_params(text: str) -> Dict[str, Any]:
    params: Dict[str, Any] = {}
    if not text:
        return params
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise InvalidInputError(f"Expected key=value, got '{item}'")
        params[key.strip()] = _coerce(value.strip())
    return params


def _require(params: Dict[str, Any], family: str, *keys: str) -> None:
    missing = [key for key in keys if key not in params]
    if missing:
        raise InvalidInputError(f"Oracle spec '{family}' is missing {', '.join(missing)}")


def load_spec_file(path) -> FunctionSpec:
    return read_spec(path)


def _cut_spec(rest: str, seed: Optional[int]) -> GraphSpec:
    if rest.startswith("random"):
        _, _, param_text = rest.partition(":")
        params = _parse_params(param_text)
        _require(params, "cut:random", "n")
        return random_graph(
            int(params["n"]),
            float(params.get("p", 0.5)),
            seed=params.get("seed", seed),
            weighted=bool(params.get("weighted", False)),
        )
    match = _NAMED_GRAPH.match(rest)
    if not match or match.group(1) not in NAMED_GRAPHS:
        raise InvalidInputError(f"Unknown graph '{rest}'; expected one of {sorted(NAMED_GRAPHS)} with a size suffix")
    return NAMED_GRAPHS[match.group(1)](int(match.group(2)))


def parse_oracle_spec(text: str, seed: Optional[int] = None) -> FunctionSpec:
    """Turn a compact spec string (or spec file reference) into a FunctionSpec."""
    text = text.strip()
    if text.startswith("@"):
        return load_spec_file(text[1:])
    if text.endswith(".json"):
        return load_spec_file(text)

    family, _, rest = text.partition(":")
    try:
        if family == "cut":
            return _cut_spec(rest, seed)

        params = _parse_params(rest)
        spec_seed = params.pop("seed", seed)
        if family == "random-sparse":
            _require(params, family, "n", "k")
            return RandomSparseSpec(
                n=params["n"],
                k=params["k"],
                model=params.get("model", 4),
                coeff_dist=params.get("dist", "normal"),
                seed=spec_seed if spec_seed is not None else 0,
            )
        if family == "coverage":
            _require(params, family, "n", "universe")
            return random_coverage_spec(
                params["n"],
                params["universe"],
                seed=spec_seed,
                density=float(params.get("density", 0.3)),
                signed=bool(params.get("signed", False)),
            )
        if family == "preference":
            _require(params, family, "n")
            return random_preference_spec(params["n"], int(params.get("L", 1)), int(params.get("K", 0)), seed=spec_seed)
        if family == "facility":
            _require(params, family, "n", "L")
            return random_facility_spec(params["n"], params["L"], seed=spec_seed, sparsity=float(params.get("sparsity", 0.0)))
        if family == "infogain":
            _require(params, family, "n")
            return random_information_gain_spec(params["n"], seed=spec_seed, sigma=float(params.get("sigma", 1.0)))
    except ValidationError as e:
        raise InvalidInputError(f"Invalid parameters in oracle spec '{text}': {e}") from e

    raise InvalidInputError(f"Unknown oracle family '{family}'")


def build_oracle(spec: FunctionSpec) -> SetFunctionOracle:
    if isinstance(spec, CoverageSpec):
        return coverage_oracle(spec)
    if isinstance(spec, PreferenceSpec):
        return preference_oracle(spec)
    if isinstance(spec, FacilitySpec):
        return facility_location_oracle(spec)
    if isinstance(spec, GraphSpec):
        return graph_cut_oracle(spec)
    if isinstance(spec, RandomSparseSpec):
        oracle, _ = random_sparse_from_spec(spec)
        return oracle
    if isinstance(spec, InformationGainSpec):
        return information_gain_oracle(spec.covariance, spec.sigma)
    raise InvalidInputError(f"Unsupported spec type {type(spec).__name__}")


def exact_ft(spec: FunctionSpec) -> Optional[SparseFT]:
    """Closed-form spectrum (model 4, or the spec's own model); None for information gain."""
    if isinstance(spec, CoverageSpec):
        return coverage_exact_ft(spec)
    if isinstance(spec, PreferenceSpec):
        return preference_exact_ft(spec)
    if isinstance(spec, FacilitySpec):
        return facility_location_exact_ft(spec)
    if isinstance(spec, GraphSpec):
        return graph_cut_exact_ft(spec)
    if isinstance(spec, RandomSparseSpec):
        _, ft = random_sparse_from_spec(spec)
        return ft
    return None


def resolve_oracle(text: str, seed: Optional[int] = None) -> Tuple[FunctionSpec, SetFunctionOracle]:
    spec = parse_oracle_spec(text, seed)
    oracle = build_oracle(spec)
    logger.debug(f"Resolved oracle '{text}' to {spec.family} on n={spec.n}")
    return spec, oracle


# Families that vanish on the empty set and whose chain survives once the
# empty frequency is kept. Cuts also vanish there but lose support further
# down the chain, so they keep the thresholded root and rely on SSFT+.
_ROOT_KEEPING_FAMILIES = frozenset({"coverage", "preference", "facility", "infogain"})


def default_keep_root(spec: FunctionSpec) -> bool:
    """Whether SSFT should keep the empty set at step 0 for this family."""
    return spec.family in _ROOT_KEEPING_FAMILIES

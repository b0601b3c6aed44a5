"""
File formats for spectra, dense functions, function specs and reports.

  spectrum   JSON {"schema_version", "n", "model", "coefficients": [{"set", "value"}]}
  dense      CSV with header rank,value, or binary: 8-byte little-endian
             length followed by little-endian float64 values
  spec       JSON {"schema_version", "spec": {...family fields}}
  report     JSON {"schema_version", ...SsftReport fields}
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np
import pandas as pd
from pydantic import ValidationError

from config import app_config
from core import DenseSetFunction, InvalidInputError, SparseFT
from models import (
    FUNCTION_SPEC_ADAPTER,
    ErrorEstimate,
    ExperimentRow,
    ExperimentSummary,
    FunctionSpec,
    GreedyResult,
    SparseFTDocument,
    SsftReport,
)

logger = logging.getLogger(__name__)

SCHEMA_VERSION = app_config.schema_version

PathLike = Union[str, Path]


def _write_json(document: Dict[str, Any], path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(document, indent=2) + "\n")
    logger.debug(f"Wrote {path}")
    return path


def _read_json(path: PathLike) -> Dict[str, Any]:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"{path} is not valid JSON: {e}") from e


def _versioned(document: Dict[str, Any]) -> Dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, **document}


def sparse_ft_document(ft: SparseFT) -> Dict[str, Any]:
    return _versioned(ft.to_json_dict())


def write_sparse_ft(ft: SparseFT, path: PathLike) -> Path:
    return _write_json(sparse_ft_document(ft), path)


def read_sparse_ft(path: PathLike) -> SparseFT:
    """Read a spectrum file; a report file is accepted too (its result is used)."""
    document = _read_json(path)
    if "result" in document and "coefficients" not in document:
        document = document["result"]
    return SparseFT.from_json_dict(document)


def write_dense(function: DenseSetFunction, path: PathLike) -> Path:
    """CSV for a .csv suffix, binary otherwise."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if path.suffix.lower() == ".csv":
        frame = pd.DataFrame({"rank": np.arange(len(function.values)), "value": function.values})
        frame.to_csv(path, index=False, float_format="%.17g")
    else:
        header = np.array([len(function.values)], dtype="<u8").tobytes()
        path.write_bytes(header + np.asarray(function.values, dtype="<f8").tobytes())
    logger.debug(f"Wrote dense function with n={function.n} to {path}")
    return path


def read_dense(path: PathLike) -> DenseSetFunction:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    if path.suffix.lower() == ".csv":
        frame = pd.read_csv(path)
        if list(frame.columns) != ["rank", "value"]:
            raise InvalidInputError(f"{path} must have header rank,value")
        frame = frame.sort_values("rank")
        if not np.array_equal(frame["rank"].to_numpy(), np.arange(len(frame))):
            raise InvalidInputError(f"{path} must list every rank 0..{len(frame) - 1} exactly once")
        return DenseSetFunction.from_values(frame["value"].to_numpy(dtype=float))

    raw = path.read_bytes()
    if len(raw) < 8:
        raise InvalidInputError(f"{path} is too short to hold a length header")
    length = int(np.frombuffer(raw[:8], dtype="<u8")[0])
    if len(raw) != 8 + 8 * length:
        raise InvalidInputError(f"{path} declares {length} values but holds {(len(raw) - 8) / 8:g}")
    return DenseSetFunction.from_values(np.frombuffer(raw[8:], dtype="<f8").copy())


def write_spec(spec: FunctionSpec, path: PathLike) -> Path:
    return _write_json(_versioned({"spec": spec.model_dump(mode="json")}), path)


def read_spec(path: PathLike) -> FunctionSpec:
    document = _read_json(path)
    # bare spec documents are accepted as well as wrapped ones
    if "spec" in document and "family" not in document:
        document = document["spec"]
    try:
        return FUNCTION_SPEC_ADAPTER.validate_python(document)
    except ValidationError as e:
        raise InvalidInputError(f"{path} is not a valid function spec: {e}") from e


def report_document(report: SsftReport) -> Dict[str, Any]:
    return _versioned(report.model_dump(mode="json"))


def write_report(report: SsftReport, path: PathLike) -> Path:
    return _write_json(report_document(report), path)


def read_report(path: PathLike) -> SsftReport:
    document = _read_json(path)
    document.pop("schema_version", None)
    return SsftReport.model_validate(document)


def json_schemas() -> Dict[str, Dict[str, Any]]:
    """Published JSON schemas, one per record type."""
    return {
        "sparse_ft": SparseFTDocument.model_json_schema(),
        "function_spec": FUNCTION_SPEC_ADAPTER.json_schema(),
        "ssft_report": SsftReport.model_json_schema(mode="serialization"),
        "error_estimate": ErrorEstimate.model_json_schema(),
        "greedy_result": GreedyResult.model_json_schema(),
        "experiment_row": ExperimentRow.model_json_schema(),
        "experiment_summary": ExperimentSummary.model_json_schema(),
    }

"""
Tests for spectrum, dense, spec and report files and the result tables.
"""

import json

import pytest
from pathlib import Path

import numpy as np
import pandas as pd
from openpyxl import load_workbook

import sys
sys.path.insert(0, str(Path(__file__).parent.parent))

from core import DenseSetFunction, InvalidInputError, ModelId, SparseFT, make_rng
from export import (
    RESULT_COLUMNS,
    SCHEMA_VERSION,
    get_column_schema,
    json_schemas,
    read_dense,
    read_report,
    read_sparse_ft,
    read_spec,
    write_dense,
    write_report,
    write_results,
    write_results_csv,
    write_results_excel,
    write_results_json,
    write_sparse_ft,
    write_spec,
)
from generators import graph_cut_oracle, random_preference_spec, random_sparse_ft
from models import ExperimentRow, ExperimentSummary, SsftConfig, ValidationStatus
from ssft import ssft_plus
from transforms import restrict_ft


@pytest.fixture
def sample_rows():
    """Two successful rows and one failed row."""
    return [
        ExperimentRow(rep=0, seed=5, queries=120, time_ms=3.5, k=8, rel_error=1e-12,
                      validation_flag=ValidationStatus.OK),
        ExperimentRow(rep=1, seed=6, queries=118, time_ms=3.1, k=8, rel_error=2e-12,
                      greedy_true=4.0, greedy_surrogate=4.0, greedy_random=2.5,
                      validation_flag=ValidationStatus.OK),
        ExperimentRow(rep=2, seed=7, queries=40, time_ms=1.0, rel_error=float("nan"),
                      validation_flag=ValidationStatus.FLAG, error="singular system"),
    ]


@pytest.fixture
def sample_summary():
    return ExperimentSummary(repetitions=3, failures=1, mean_queries=119.0, mean_k=8.0, mean_rel_error=1.5e-12)


class TestSpectrumFiles:
    """Sparse spectrum JSON files."""

    def test_round_trip(self, temp_dir):
        """Written spectra read back identically."""
        ft = random_sparse_ft(9, 7, ModelId.WHT, seed=3)
        path = write_sparse_ft(ft, temp_dir / "spectrum.json")
        assert read_sparse_ft(path).allclose(ft, rel_tol=0.0, abs_tol=0.0)

    def test_document_layout(self, temp_dir):
        """Versioned document with 1-based sets."""
        ft = SparseFT(3, ModelId.UNION, {0b011: 2.0})
        path = write_sparse_ft(ft, temp_dir / "s.json")
        document = json.loads(path.read_text())
        assert document["schema_version"] == SCHEMA_VERSION
        assert document["model"] == 4
        assert document["coefficients"] == [{"set": [1, 2], "value": 2.0}]

    def test_restricted_domain(self, temp_dir):
        """Restricted spectra keep their domain."""
        ft = restrict_ft(random_sparse_ft(6, 5, ModelId.WHT, seed=1), 0b000111, ModelId.WHT)
        again = read_sparse_ft(write_sparse_ft(ft, temp_dir / "r.json"))
        assert again.domain == 0b000111

    def test_report_file_accepted(self, temp_dir, path3):
        """A report file yields its result."""
        report = ssft_plus(graph_cut_oracle(path3), 3, SsftConfig(seed=0))
        path = write_report(report, temp_dir / "report.json")
        assert read_sparse_ft(path).allclose(report.result, rel_tol=0.0, abs_tol=0.0)

    def test_missing_field(self, temp_dir):
        """Documents without coefficients are rejected."""
        path = temp_dir / "bad.json"
        path.write_text(json.dumps({"n": 3, "model": 4}))
        with pytest.raises(InvalidInputError):
            read_sparse_ft(path)


class TestDenseFiles:
    """Dense vectors as CSV or binary."""

    @pytest.mark.parametrize("name", ["values.csv", "values.bin"])
    def test_round_trip(self, temp_dir, name):
        """Both encodings preserve every bit."""
        function = DenseSetFunction(5, make_rng(2).standard_normal(32))
        again = read_dense(write_dense(function, temp_dir / name))
        np.testing.assert_array_equal(again.values, function.values)

    def test_csv_header(self, temp_dir, path3_cut):
        """CSV has columns rank,value."""
        path = write_dense(path3_cut, temp_dir / "cut.csv")
        frame = pd.read_csv(path)
        assert list(frame.columns) == ["rank", "value"]
        assert frame["value"].tolist() == path3_cut.values.tolist()

    def test_binary_layout(self, temp_dir, path3_cut):
        """8-byte length header then float64 values."""
        raw = write_dense(path3_cut, temp_dir / "cut.bin").read_bytes()
        assert len(raw) == 8 + 8 * 8
        assert int.from_bytes(raw[:8], "little") == 8

    def test_truncated_binary(self, temp_dir):
        """A header that disagrees with the payload is rejected."""
        path = temp_dir / "short.bin"
        path.write_bytes((4).to_bytes(8, "little") + b"\x00" * 8)
        with pytest.raises(InvalidInputError):
            read_dense(path)

    def test_missing_file(self, temp_dir):
        with pytest.raises(FileNotFoundError):
            read_dense(temp_dir / "absent.csv")


class TestSpecAndReportFiles:
    """Function specs and SSFT reports."""

    def test_spec_round_trip(self, temp_dir):
        """Specs are wrapped with a schema version and read back."""
        spec = random_preference_spec(5, 2, 1, seed=0)
        path = write_spec(spec, temp_dir / "pref.json")
        document = json.loads(path.read_text())
        assert document["spec"]["family"] == "preference"
        assert read_spec(path) == spec

    def test_bare_spec(self, temp_dir, path3):
        """Unwrapped spec documents are accepted."""
        path = temp_dir / "graph.json"
        path.write_text(path3.model_dump_json())
        assert read_spec(path) == path3

    def test_invalid_spec(self, temp_dir):
        path = temp_dir / "bad.json"
        path.write_text(json.dumps({"family": "cut", "n": 0}))
        with pytest.raises(InvalidInputError):
            read_spec(path)

    def test_report_round_trip(self, temp_dir, path3):
        """Reports keep accounting fields and the result."""
        report = ssft_plus(graph_cut_oracle(path3), 3, SsftConfig(seed=0))
        again = read_report(write_report(report, temp_dir / "report.json"))
        assert again.queries_used == report.queries_used
        assert again.seed_used == 0
        assert again.support_sizes_per_step == report.support_sizes_per_step
        assert again.result.allclose(report.result, rel_tol=0.0, abs_tol=0.0)

    def test_schemas(self):
        """Every record type publishes a schema; the report embeds the spectrum layout."""
        schemas = json_schemas()
        assert set(schemas) == {
            "sparse_ft", "function_spec", "ssft_report", "error_estimate",
            "greedy_result", "experiment_row", "experiment_summary",
        }
        assert "coefficients" in schemas["sparse_ft"]["properties"]
        assert "result" in schemas["ssft_report"]["properties"]


class TestResultTables:
    """Experiment results as CSV, JSON and Excel."""

    def test_csv_columns(self, temp_dir, sample_rows):
        """Fixed column order, one line per repetition."""
        path = write_results_csv(sample_rows, temp_dir / "results.csv")
        frame = pd.read_csv(path)
        assert list(frame.columns) == RESULT_COLUMNS
        assert len(frame) == 3
        assert frame["seed"].tolist() == [5, 6, 7]

    def test_json_with_summary(self, temp_dir, sample_rows, sample_summary):
        """JSON carries rows, summary and schema version."""
        path = write_results_json(sample_rows, temp_dir / "results.json", sample_summary)
        document = json.loads(path.read_text())
        assert document["schema_version"] == SCHEMA_VERSION
        assert len(document["rows"]) == 3
        assert document["rows"][2]["error"] == "singular system"
        assert document["summary"]["failures"] == 1

    def test_excel(self, temp_dir, sample_rows, sample_summary):
        """Workbook has a results sheet with flags and a summary sheet."""
        path = write_results_excel(sample_rows, temp_dir / "results.xlsx", sample_summary)
        wb = load_workbook(path)
        assert wb.sheetnames == ["Results", "Summary"]

        ws = wb["Results"]
        headers = [cell.value for cell in ws[1]]
        assert headers[:len(RESULT_COLUMNS)] == RESULT_COLUMNS
        flag_col = headers.index("validation_flag") + 1
        assert ws.cell(row=4, column=flag_col).value == "FLAG"
        assert wb["Summary"]["B5"].value == 1

    def test_dispatch_on_suffix(self, temp_dir, sample_rows):
        """write_results picks the format from the suffix."""
        for name in ["r.csv", "r.json", "r.xlsx"]:
            assert write_results(sample_rows, temp_dir / name).exists()

    def test_column_schema(self):
        """Every result column is described."""
        assert list(get_column_schema()) == RESULT_COLUMNS

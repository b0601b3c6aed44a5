"""
Experiment result tables.
Writes per-repetition rows as CSV (fixed column order), JSON (rows plus
summary) or an Excel workbook with data and summary sheets.
"""

import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from openpyxl import Workbook
from openpyxl.cell.cell import MergedCell
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side

from models import ExperimentRow, ExperimentSummary, ValidationStatus

from .formats import SCHEMA_VERSION, _write_json

logger = logging.getLogger(__name__)


# Result column order shared by every table format
RESULT_COLUMNS = [
    "rep",
    "seed",
    "queries",
    "time_ms",
    "k",
    "rel_error",
    "greedy_true",
    "greedy_surrogate",
    "greedy_random",
]

# Extra columns carried in the workbook only
WORKBOOK_COLUMNS = RESULT_COLUMNS + ["truncated", "validation_flag", "notes", "error"]

COLUMN_TYPES = {
    "rep": "int",
    "seed": "int",
    "queries": "int (oracle counter delta)",
    "time_ms": "float (wall time of the learner)",
    "k": "int (recovered support size)",
    "rel_error": "float (sampled relative reconstruction error)",
    "greedy_true": "float (true objective of greedy on the true function)",
    "greedy_surrogate": "float (true objective of greedy on the learned spectrum)",
    "greedy_random": "float (true objective of a random placement)",
}


def rows_to_frame(rows: Sequence[ExperimentRow], columns: Sequence[str] = RESULT_COLUMNS) -> pd.DataFrame:
    records = [row.model_dump(mode="json") for row in rows]
    return pd.DataFrame.from_records(records, columns=list(columns))


def write_results_csv(rows: Sequence[ExperimentRow], output_path: Path) -> Path:
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    rows_to_frame(rows).to_csv(output_path, index=False, float_format="%.10g")
    logger.info(f"Wrote {len(rows)} result rows to {output_path}")
    return output_path


def write_results_json(
    rows: Sequence[ExperimentRow],
    output_path: Path,
    summary: Optional[ExperimentSummary] = None,
) -> Path:
    document: Dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "rows": [row.model_dump(mode="json") for row in rows],
    }
    if summary is not None:
        document["summary"] = summary.model_dump(mode="json")
    path = _write_json(document, output_path)
    logger.info(f"Wrote {len(rows)} result rows to {path}")
    return path


class ResultsWorkbookWriter:
    """Generate Excel workbooks from experiment rows."""

    def __init__(self):
        self.columns = WORKBOOK_COLUMNS

        # Styling
        self.header_font = Font(bold=True, color="FFFFFF")
        self.header_fill = PatternFill(start_color="4472C4", end_color="4472C4", fill_type="solid")
        self.header_alignment = Alignment(horizontal="center", vertical="center", wrap_text=True)

        self.flag_fill = PatternFill(start_color="FFC7CE", end_color="FFC7CE", fill_type="solid")
        self.ok_fill = PatternFill(start_color="C6EFCE", end_color="C6EFCE", fill_type="solid")

        self.thin_border = Border(
            left=Side(style="thin"),
            right=Side(style="thin"),
            top=Side(style="thin"),
            bottom=Side(style="thin")
        )

    def write(
        self,
        rows: List[ExperimentRow],
        output_path: Path,
        summary: Optional[ExperimentSummary] = None,
        title: str = "Experiment",
    ) -> Path:
        """
        Write rows to an Excel file.

        Args:
            rows: Experiment rows, one per repetition
            output_path: Path for output Excel file
            summary: Summary to put on a second sheet, if any
            title: Heading of the summary sheet

        Returns:
            Path to created Excel file
        """
        output_path = Path(output_path)
        logger.info(f"Writing {len(rows)} rows to {output_path}")

        wb = Workbook()
        ws_data = wb.active
        ws_data.title = "Results"
        self._write_data_sheet(ws_data, rows)

        if summary is not None:
            ws_summary = wb.create_sheet("Summary")
            self._write_summary_sheet(ws_summary, summary, title)

        output_path.parent.mkdir(parents=True, exist_ok=True)
        wb.save(output_path)

        logger.info(f"Excel file saved: {output_path}")
        return output_path

    def _write_data_sheet(self, ws, rows: List[ExperimentRow]):
        for col_idx, header in enumerate(self.columns, 1):
            cell = ws.cell(row=1, column=col_idx, value=header)
            cell.font = self.header_font
            cell.fill = self.header_fill
            cell.alignment = self.header_alignment
            cell.border = self.thin_border

        for row_idx, row in enumerate(rows, 2):
            row_data = row.model_dump(mode="json")
            for col_idx, header in enumerate(self.columns, 1):
                value = row_data.get(header)
                cell = ws.cell(row=row_idx, column=col_idx, value=value)
                cell.border = self.thin_border

                if header == "rel_error":
                    cell.number_format = "0.00E+00"
                elif header in ("time_ms", "greedy_true", "greedy_surrogate", "greedy_random"):
                    cell.number_format = "#,##0.000"

                if header == "validation_flag":
                    cell.fill = self.flag_fill if value == ValidationStatus.FLAG.value else self.ok_fill

        self._auto_fit_columns(ws)
        ws.freeze_panes = "A2"

    def _write_summary_sheet(self, ws, summary: ExperimentSummary, title: str):
        ws["A1"] = f"{title} Summary"
        ws["A1"].font = Font(bold=True, size=14)
        ws.merge_cells("A1:B1")
        ws["A2"] = f"Generated: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}"

        stats = [
            ("Repetitions", summary.repetitions),
            ("Failures", summary.failures),
            ("Mean Queries", summary.mean_queries),
            ("Mean Time (ms)", summary.mean_time_ms),
            ("Mean k", summary.mean_k),
            ("Mean Relative Error", summary.mean_rel_error),
            ("Mean Greedy (true)", summary.mean_greedy_true),
            ("Mean Greedy (surrogate)", summary.mean_greedy_surrogate),
            ("Mean Greedy (random)", summary.mean_greedy_random),
        ]
        for idx, (label, value) in enumerate(stats, 4):
            ws[f"A{idx}"] = label
            ws[f"B{idx}"] = value
            if label == "Mean Relative Error":
                ws[f"B{idx}"].number_format = "0.00E+00"

        self._auto_fit_columns(ws)

    def _auto_fit_columns(self, ws, min_width: int = 10, max_width: int = 50):
        """Auto-fit column widths based on content."""
        for column_cells in ws.columns:
            column = next((c.column_letter for c in column_cells if not isinstance(c, MergedCell)), None)
            if column is None:
                continue
            lengths = [len(str(c.value)) for c in column_cells if not isinstance(c, MergedCell) and c.value is not None]
            width = max(lengths, default=0) + 2
            ws.column_dimensions[column].width = min(max(width, min_width), max_width)


def write_results_excel(
    rows: List[ExperimentRow],
    output_path: Path,
    summary: Optional[ExperimentSummary] = None,
) -> Path:
    """Convenience function to write a results workbook."""
    writer = ResultsWorkbookWriter()
    return writer.write(rows, output_path, summary)


def write_results(
    rows: List[ExperimentRow],
    output_path: Path,
    summary: Optional[ExperimentSummary] = None,
) -> Path:
    """Dispatch on suffix: .csv, .json or .xlsx."""
    suffix = Path(output_path).suffix.lower()
    if suffix == ".json":
        return write_results_json(rows, output_path, summary)
    if suffix == ".xlsx":
        return write_results_excel(rows, output_path, summary)
    return write_results_csv(rows, output_path)


def get_column_schema() -> Dict[str, str]:
    """Get the result column schema with types."""
    return COLUMN_TYPES.copy()

"""Export module: file formats and result tables."""

from .formats import (
    SCHEMA_VERSION,
    write_sparse_ft,
    read_sparse_ft,
    sparse_ft_document,
    write_dense,
    read_dense,
    write_spec,
    read_spec,
    write_report,
    read_report,
    report_document,
    json_schemas,
)
from .results_writer import (
    ResultsWorkbookWriter,
    write_results,
    write_results_csv,
    write_results_json,
    write_results_excel,
    rows_to_frame,
    get_column_schema,
    RESULT_COLUMNS,
    COLUMN_TYPES,
)

__all__ = [
    "SCHEMA_VERSION",
    "write_sparse_ft",
    "read_sparse_ft",
    "sparse_ft_document",
    "write_dense",
    "read_dense",
    "write_spec",
    "read_spec",
    "write_report",
    "read_report",
    "report_document",
    "json_schemas",
    "ResultsWorkbookWriter",
    "write_results",
    "write_results_csv",
    "write_results_json",
    "write_results_excel",
    "rows_to_frame",
    "get_column_schema",
    "RESULT_COLUMNS",
    "COLUMN_TYPES",
]

"""
Checks on recovered spectra.
Compares an SsftReport against ground truth (when known) and against its own
query accounting, and flags experiment rows accordingly.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from config import validation_config
from core import ModelId, SparseFT
from models import ExperimentRow, SsftReport, ValidationStatus

logger = logging.getLogger(__name__)


@dataclass
class ValidationIssue:
    """Represents a single validation issue."""
    field: str
    issue_type: str
    message: str
    severity: str = "error"  # error, warning, info


@dataclass
class ValidationResult:
    """Result of validating one recovery run."""
    run_id: str
    is_valid: bool
    issues: List[ValidationIssue] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def has_errors(self) -> bool:
        return any(i.severity == "error" for i in self.issues)

    @property
    def has_warnings(self) -> bool:
        return any(i.severity == "warning" for i in self.issues)

    @property
    def notes(self) -> Optional[str]:
        if not self.issues:
            return None
        return "; ".join(f"{i.field}: {i.message}" for i in self.issues)


class RecoveryValidator:
    """Validator for SSFT / SSFT+ reports."""

    def __init__(self):
        self.config = validation_config

    def validate(
        self,
        report: SsftReport,
        truth: Optional[SparseFT] = None,
        row: Optional[ExperimentRow] = None,
        run_id: str = "run",
    ) -> ValidationResult:
        """
        Validate a recovery report.

        Args:
            report: SsftReport to check
            truth: Ground-truth spectrum in the report's model, if known
            row: Experiment row to flag, if any

        Returns:
            ValidationResult with issues
        """
        result = ValidationResult(run_id=run_id, is_valid=True)

        self._check_truncation(report, result)
        if truth is not None:
            if self._check_model(report, truth, result):
                self._check_support(report, truth, result)
                self._check_coefficients(report, truth, result)
        # The query bound holds for exact model-3/4 recoveries only.
        if report.model != ModelId.WHT and not result.has_errors:
            self._check_query_bound(report, result)

        result.is_valid = not result.has_errors
        if row is not None:
            row.validation_flag = ValidationStatus.OK if result.is_valid else ValidationStatus.FLAG
            if result.issues:
                row.notes = result.notes

        if not result.is_valid:
            logger.debug(f"Recovery {run_id} flagged: {result.notes}")
        return result

    def validate_batch(self, runs: Sequence[Tuple[SsftReport, Optional[SparseFT]]]) -> List[ValidationResult]:
        return [self.validate(report, truth, run_id=f"run-{i}") for i, (report, truth) in enumerate(runs)]

    def _check_truncation(self, report: SsftReport, result: ValidationResult):
        if report.truncated:
            result.issues.append(ValidationIssue(
                field="support",
                issue_type="truncated",
                message=f"Support capped at k_max={report.k_max}",
                severity="warning"
            ))

    def _check_query_bound(self, report: SsftReport, result: ValidationResult):
        if not report.within_query_bound:
            result.issues.append(ValidationIssue(
                field="queries_used",
                issue_type="bound_exceeded",
                message=f"{report.queries_used} queries exceed the bound {report.query_bound:.1f} for k={report.k}",
                severity="warning"
            ))

    def _check_model(self, report: SsftReport, truth: SparseFT, result: ValidationResult) -> bool:
        if truth.model != report.model or truth.n != report.result.n:
            result.issues.append(ValidationIssue(
                field="model",
                issue_type="mismatch",
                message=f"Truth is model {int(truth.model)} on n={truth.n}, "
                        f"report is model {int(report.model)} on n={report.result.n}",
                severity="error"
            ))
            return False
        return True

    def _check_support(self, report: SsftReport, truth: SparseFT, result: ValidationResult):
        """Frequencies present on one side only (spurious ones below abs tolerance ignored)."""
        tol = self.config.coefficient_abs_tol
        recovered = {b for b, v in report.result.items() if abs(v) > tol}
        expected = {b for b, v in truth.items() if abs(v) > tol}
        missing = expected - recovered
        extra = recovered - expected
        if missing or extra:
            result.issues.append(ValidationIssue(
                field="support",
                issue_type="support_mismatch",
                message=f"{len(missing)} missing and {len(extra)} spurious frequencies",
                severity="error"
            ))
            result.details["missing"] = sorted(missing)
            result.details["extra"] = sorted(extra)

    def _check_coefficients(self, report: SsftReport, truth: SparseFT, result: ValidationResult):
        worst = 0.0
        for b in set(report.result.support) | set(truth.support):
            got, want = report.result.get(b), truth.get(b)
            if not math.isclose(got, want, rel_tol=self.config.coefficient_rel_tol,
                                abs_tol=self.config.coefficient_abs_tol):
                worst = max(worst, abs(got - want))
        if worst > 0.0:
            result.issues.append(ValidationIssue(
                field="coefficients",
                issue_type="coefficient_error",
                message=f"Max coefficient deviation {worst:.3e}",
                severity="error"
            ))
            result.details["max_deviation"] = worst


def validate_report(report: SsftReport, truth: Optional[SparseFT] = None) -> ValidationResult:
    """Convenience function to validate a single report."""
    validator = RecoveryValidator()
    return validator.validate(report, truth)

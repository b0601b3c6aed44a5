"""Validation of recovered spectra."""

from .recovery import (
    RecoveryValidator,
    ValidationResult,
    ValidationIssue,
    validate_report,
)

__all__ = [
    "RecoveryValidator",
    "ValidationResult",
    "ValidationIssue",
    "validate_report",
]

"""Reconstruction error, greedy maximisation and the experiment harness."""

from .metrics import relative_error, sample_sets
from .greedy import greedy_maximize, random_placement
from .experiment import run_experiment, run_repetition, summarize_rows

__all__ = [
    "relative_error",
    "sample_sets",
    "greedy_maximize",
    "random_placement",
    "run_experiment",
    "run_repetition",
    "summarize_rows",
]

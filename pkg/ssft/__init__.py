"""Known-support recovery and the SSFT / SSFT+ learners."""

from .known_support import (
    solve_known_support,
    solve_wht_least_squares,
    solve_triangular_system,
    triangular_system,
)
from .propagation import PropagationStep, support_propagate
from .algorithm import ssft, ssft_plus

__all__ = [
    "solve_known_support",
    "solve_wht_least_squares",
    "solve_triangular_system",
    "triangular_system",
    "PropagationStep",
    "support_propagate",
    "ssft",
    "ssft_plus",
]

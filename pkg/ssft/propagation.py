"""
Support propagation along the restriction chain M_0 = {} , M_i = {x_1..x_i}.

Every frequency of the step-i restricted spectrum is B or B | {x_i} for some
B in the step-(i-1) support, so the candidates double at most. Query sets
come paired: the first half is new, the second half repeats step i-1.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from core import InvalidInputError, ModelId, full_bits


@dataclass(frozen=True)
class PropagationStep:
    """Candidates [B..., B|x...] aligned with their query sets (empty for model 5)."""
    candidates: List[int]
    queries: List[int] = field(default_factory=list)


def support_propagate(prev_support: Iterable[int], x: int, model=ModelId.UNION, n: Optional[int] = None) -> PropagationStep:
    """
    Candidate support and query sets for step x (element x_x, 1-based).

    Model 4 queries M_x \\ B and M_x \\ (B | {x}); model 3 queries
    M_x^c | B and M_x^c | B | {x}, which needs n.
    """
    model = ModelId.parse(model)
    if x < 1:
        raise InvalidInputError(f"Element index must be positive, got {x}")
    bit = 1 << (x - 1)
    prev = list(prev_support)
    for b in prev:
        if b >> (x - 1):
            raise InvalidInputError(f"Support mask {b:#x} is not inside M_{x - 1}")

    candidates = prev + [b | bit for b in prev]
    m_bits = full_bits(x)
    if model == ModelId.UNION:
        return PropagationStep(candidates, [m_bits & ~b for b in candidates])
    if model == ModelId.DIFFERENCE:
        if n is None or n < x:
            raise InvalidInputError("Model 3 propagation needs the ground set size n >= x")
        outside = full_bits(n) & ~m_bits
        return PropagationStep(candidates, [outside | b for b in candidates])
    return PropagationStep(candidates)

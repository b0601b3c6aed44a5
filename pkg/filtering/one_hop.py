"""
One-hop filters and filtered oracles.

A one-hop filter has h(empty) = 1, h({x_i}) = c_i and zero elsewhere, so
  (h * s)(A) = s(A) + sum_i c_i s(A shifted by x_i)
with the model's shift: A | {x_i} (model 4), A minus {x_i} (model 3) or
A xor {x_i} (model 5). Shifts that leave A unchanged are folded into a
single query of s(A).
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from core import InvalidInputError, ModelId, SetFunctionOracle, make_rng, resolve_seed
from core.subsets import as_bits, elements_of, masks_to_indicators

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class OneHopFilter:
    """Filter supported on the empty set (fixed to 1) and the singletons."""

    n: int
    singleton_coeffs: np.ndarray
    seed: Optional[int] = None

    def __post_init__(self):
        coeffs = np.array(self.singleton_coeffs, dtype=float).reshape(-1)
        if coeffs.shape[0] != int(self.n):
            raise InvalidInputError(f"Expected {self.n} singleton coefficients, got {coeffs.shape[0]}")
        if not np.all(np.isfinite(coeffs)):
            raise InvalidInputError("Singleton coefficients must be finite")
        coeffs.setflags(write=False)
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "singleton_coeffs", coeffs)

    @property
    def base(self) -> float:
        return 1.0

    @classmethod
    def identity(cls, n: int) -> "OneHopFilter":
        return cls(n, np.zeros(n))


def sample_one_hop(n: int, seed: Optional[int] = None) -> OneHopFilter:
    """Singleton coefficients i.i.d. standard normal from the seeded generator."""
    if n < 1:
        raise InvalidInputError(f"Ground set size must be positive, got {n}")
    seed = resolve_seed(seed)
    coeffs = make_rng(seed).standard_normal(n)
    return OneHopFilter(n, coeffs, seed=seed)


def frequency_response(h: OneHopFilter, b, model) -> float:
    """
    Multiplier applied at frequency B.

    Models 3 and 4: 1 + sum of c_x over x not in B.
    Model 5: 1 + sum over x not in B minus sum over x in B.
    """
    model = ModelId.parse(model)
    bits = as_bits(b, h.n)
    inside = math.fsum(h.singleton_coeffs[i - 1] for i in elements_of(bits))
    total = math.fsum(h.singleton_coeffs)
    if model == ModelId.WHT:
        return 1.0 + total - 2.0 * inside
    return 1.0 + total - inside


def frequency_response_many(h: OneHopFilter, masks: Iterable[int], model) -> np.ndarray:
    model = ModelId.parse(model)
    masks = list(masks)
    if not masks:
        return np.zeros(0)
    inside = masks_to_indicators(masks, h.n).astype(float) @ h.singleton_coeffs
    total = float(np.sum(h.singleton_coeffs))
    if model == ModelId.WHT:
        return 1.0 + total - 2.0 * inside
    return 1.0 + total - inside


class FilteredOracle(SetFunctionOracle):
    """
    Oracle for h * s. Its own counter counts filtered evaluations; the
    wrapped oracle's counter records the underlying queries:
    1 + n - |A| (model 4), 1 + |A| (model 3), 1 + n (model 5).
    """

    def __init__(self, h: OneHopFilter, inner: SetFunctionOracle, model):
        if h.n != inner.n:
            raise InvalidInputError(f"Filter is over n={h.n}, oracle over n={inner.n}")
        super().__init__(inner.n)
        self.filter = h
        self.inner = inner
        self.model = ModelId.parse(model)
        self._coeffs = [float(c) for c in h.singleton_coeffs]

    def _evaluate(self, bits: int) -> float:
        query = self.inner.eval
        center = 1.0
        shifted = 0.0
        value = query(bits)
        for i, c in enumerate(self._coeffs):
            x = 1 << i
            if self.model == ModelId.UNION:
                if bits & x:
                    center += c
                else:
                    shifted += c * query(bits | x)
            elif self.model == ModelId.DIFFERENCE:
                if bits & x:
                    shifted += c * query(bits & ~x)
                else:
                    center += c
            else:
                shifted += c * query(bits ^ x)
        return center * value + shifted

    def clone(self) -> "FilteredOracle":
        twin = super().clone()
        twin.inner = self.inner.clone()
        return twin


def filtered_oracle(h: OneHopFilter, s: SetFunctionOracle, model) -> FilteredOracle:
    return FilteredOracle(h, s, model)

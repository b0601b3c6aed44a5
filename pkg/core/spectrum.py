"""
Fourier model identifiers and the sparse spectrum value type.
"""

import math
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple

from .exceptions import InvalidInputError
from .subsets import bits_from_elements, check_bits, elements_of, full_bits, order_key, popcount


class ModelId(IntEnum):
    """Shift model inducing the convolution and the Fourier basis."""
    DIFFERENCE = 3  # A \ Q
    UNION = 4       # A | Q
    WHT = 5         # symmetric difference

    @classmethod
    def parse(cls, value: Any) -> "ModelId":
        try:
            return cls(int(value))
        except (TypeError, ValueError):
            raise InvalidInputError(f"Unknown model {value!r}; expected one of 3, 4, 5") from None


@dataclass(frozen=True)
class SparseFT:
    """
    Sparse Fourier spectrum: frequency bits -> nonzero coefficient.

    domain is the ground set the spectrum lives on; it is N unless the
    spectrum came out of a restriction, and it fixes the 2^-|domain|
    normalisation of model 5.
    """

    n: int
    model: ModelId
    entries: Mapping[int, float] = field(default_factory=dict)
    domain: Optional[int] = None

    def __post_init__(self):
        if int(self.n) < 1:
            raise InvalidInputError(f"Ground set size must be positive, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "model", ModelId.parse(self.model))
        domain = full_bits(self.n) if self.domain is None else check_bits(int(self.domain), self.n)
        object.__setattr__(self, "domain", domain)

        clean: Dict[int, float] = {}
        for bits, value in self.entries.items():
            bits = check_bits(int(bits), self.n)
            value = float(value)
            if not math.isfinite(value):
                raise InvalidInputError(f"Coefficient at {bits:#x} is not finite")
            if value == 0.0:
                raise InvalidInputError(f"Coefficient at {bits:#x} is zero; drop it instead")
            if bits & ~domain:
                raise InvalidInputError(f"Frequency {bits:#x} lies outside the domain {domain:#x}")
            clean[bits] = value
        ordered = dict(sorted(clean.items(), key=lambda item: order_key(item[0], self.n)))
        object.__setattr__(self, "entries", ordered)

    @classmethod
    def from_coefficients(
        cls,
        n: int,
        model: Any,
        coefficients: Mapping[int, float],
        domain: Optional[int] = None,
        tolerance: float = 0.0,
    ) -> "SparseFT":
        """Build a spectrum, dropping coefficients with |value| <= tolerance."""
        kept = {b: float(v) for b, v in coefficients.items() if abs(float(v)) > tolerance}
        return cls(n=n, model=model, entries=kept, domain=domain)

    @classmethod
    def empty(cls, n: int, model: Any) -> "SparseFT":
        return cls(n=n, model=model)

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def support(self) -> List[int]:
        return list(self.entries)

    @property
    def domain_size(self) -> int:
        return popcount(self.domain)

    def items(self) -> Iterator[Tuple[int, float]]:
        return iter(self.entries.items())

    def get(self, bits: int) -> float:
        return self.entries.get(bits, 0.0)

    def allclose(self, other: "SparseFT", rel_tol: float = 1e-6, abs_tol: float = 1e-9) -> bool:
        """Same model, same support and coefficients within tolerance."""
        if self.model != other.model or self.n != other.n:
            return False
        if set(self.entries) != set(other.entries):
            return False
        return all(
            math.isclose(value, other.entries[bits], rel_tol=rel_tol, abs_tol=abs_tol)
            for bits, value in self.entries.items()
        )

    def to_json_dict(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {
            "n": self.n,
            "model": int(self.model),
            "coefficients": [
                {"set": elements_of(bits), "value": value} for bits, value in self.entries.items()
            ],
        }
        if self.domain != full_bits(self.n):
            document["domain"] = elements_of(self.domain)
        return document

    @classmethod
    def from_json_dict(cls, document: Mapping[str, Any]) -> "SparseFT":
        try:
            n = int(document["n"])
            model = document["model"]
            coefficients = document["coefficients"]
        except (KeyError, TypeError) as e:
            raise InvalidInputError(f"Spectrum document is missing field {e}") from None

        entries: Dict[int, float] = {}
        for item in coefficients:
            bits = bits_from_elements(item["set"], n)
            if bits in entries:
                raise InvalidInputError(f"Duplicate frequency {sorted(item['set'])}")
            entries[bits] = float(item["value"])
        domain = document.get("domain")
        domain_bits = None if domain is None else bits_from_elements(domain, n)
        return cls(n=n, model=model, entries=entries, domain=domain_bits)

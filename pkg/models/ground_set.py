"""
Ground set description with optional element labels.
"""

from typing import Iterable, List, Optional

from pydantic import BaseModel, Field, model_validator

from core import InvalidInputError, SubsetMask


class GroundSet(BaseModel):
    """Ground set N = {x_1, ..., x_n}."""

    n: int = Field(ge=1, description="Number of elements")
    labels: Optional[List[str]] = Field(default=None, description="Element labels, one per element")

    @model_validator(mode="after")
    def check_labels(self) -> "GroundSet":
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError(f"Expected {self.n} labels, got {len(self.labels)}")
            if len(set(self.labels)) != self.n:
                raise ValueError("Element labels must be unique")
        return self

    def label_of(self, element: int) -> str:
        """Label of the 1-based element index."""
        if not 1 <= element <= self.n:
            raise InvalidInputError(f"Element index {element} outside 1..{self.n}")
        return self.labels[element - 1] if self.labels else f"x{element}"

    def labels_of(self, mask: SubsetMask) -> List[str]:
        return [self.label_of(i) for i in mask.elements]

    def mask_from_labels(self, labels: Iterable[str]) -> SubsetMask:
        names = self.labels or [f"x{i}" for i in range(1, self.n + 1)]
        index = {name: i + 1 for i, name in enumerate(names)}
        try:
            return SubsetMask.from_elements([index[label] for label in labels], self.n)
        except KeyError as e:
            raise InvalidInputError(f"Unknown element label {e}") from None

    def full(self) -> SubsetMask:
        return SubsetMask.full(self.n)

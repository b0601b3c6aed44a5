"""Dense fast transforms and sparse spectrum evaluation."""

from .fast import ButterflyCounter, dense_ft, dense_ift, transform_matrix, KERNEL_MATRICES
from .sparse import (
    SparseOracle,
    eval_sparse,
    eval_sparse_many,
    restrict_ft,
    sparse_to_dense,
    dense_to_sparse,
)

__all__ = [
    "ButterflyCounter",
    "dense_ft",
    "dense_ift",
    "transform_matrix",
    "KERNEL_MATRICES",
    "SparseOracle",
    "eval_sparse",
    "eval_sparse_many",
    "restrict_ft",
    "sparse_to_dense",
    "dense_to_sparse",
]

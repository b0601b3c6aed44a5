"""Subset algebra, spectra, dense functions and the counting oracle."""

from .exceptions import (
    SetFunctionError,
    InvalidInputError,
    CapacityError,
    RecoveryError,
    DegenerateFilterError,
    UndefinedErrorEstimate,
)
from .subsets import (
    SubsetMask,
    popcount,
    lex_rank,
    from_lex_rank,
    elements_of,
    bits_from_elements,
    full_bits,
    order_key,
)
from .spectrum import ModelId, SparseFT
from .oracle import SetFunctionOracle, CallableOracle
from .dense import DenseSetFunction, DenseOracle, oracle_from_dense, densify
from .rng import make_rng, resolve_seed

__all__ = [
    "SetFunctionError",
    "InvalidInputError",
    "CapacityError",
    "RecoveryError",
    "DegenerateFilterError",
    "UndefinedErrorEstimate",
    "SubsetMask",
    "popcount",
    "lex_rank",
    "from_lex_rank",
    "elements_of",
    "bits_from_elements",
    "full_bits",
    "order_key",
    "ModelId",
    "SparseFT",
    "SetFunctionOracle",
    "CallableOracle",
    "DenseSetFunction",
    "DenseOracle",
    "oracle_from_dense",
    "densify",
    "make_rng",
    "resolve_seed",
]

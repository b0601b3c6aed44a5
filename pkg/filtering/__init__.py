"""One-hop filters, filtered oracles and dense convolution."""

from .one_hop import (
    OneHopFilter,
    FilteredOracle,
    sample_one_hop,
    filtered_oracle,
    frequency_response,
    frequency_response_many,
)
from .convolution import (
    dense_convolve,
    spectral_convolve,
    dense_frequency_response,
    one_hop_to_dense,
)

__all__ = [
    "OneHopFilter",
    "FilteredOracle",
    "sample_one_hop",
    "filtered_oracle",
    "frequency_response",
    "frequency_response_many",
    "dense_convolve",
    "spectral_convolve",
    "dense_frequency_response",
    "one_hop_to_dense",
]

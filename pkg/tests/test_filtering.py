"""
Tests for one-hop filters, filtered oracles and the convolution theorem.
"""

import pytest
from pathlib import Path

import numpy as np

import sys
sys.path.insert(0, str(Path(__file__).parent.parent))

from core import DenseSetFunction, InvalidInputError, ModelId, densify, make_rng, oracle_from_dense, popcount
from filtering import (
    OneHopFilter,
    dense_convolve,
    dense_frequency_response,
    filtered_oracle,
    frequency_response,
    frequency_response_many,
    one_hop_to_dense,
    sample_one_hop,
    spectral_convolve,
)
from core.subsets import from_lex_rank
from transforms import dense_ft
from tests.conftest import random_dense

MODELS = [ModelId.DIFFERENCE, ModelId.UNION, ModelId.WHT]


class TestOneHopFilter:
    """Tests for filter sampling and frequency responses."""

    def test_sampling_is_seeded(self):
        """Equal seeds give equal filters; the seed is recorded."""
        a = sample_one_hop(6, seed=42)
        b = sample_one_hop(6, seed=42)
        np.testing.assert_array_equal(a.singleton_coeffs, b.singleton_coeffs)
        assert a.seed == 42
        assert a.base == 1.0

    def test_fresh_seed_recorded(self):
        """Without a seed a fresh one is drawn and kept."""
        h = sample_one_hop(4)
        assert isinstance(h.seed, int)
        np.testing.assert_array_equal(sample_one_hop(4, h.seed).singleton_coeffs, h.singleton_coeffs)

    def test_identity_filter(self):
        """The identity filter has response 1 everywhere."""
        h = OneHopFilter.identity(4)
        for model in MODELS:
            assert frequency_response(h, 0b1011, model) == 1.0

    def test_wrong_length(self):
        """Coefficient count must equal n."""
        with pytest.raises(InvalidInputError):
            OneHopFilter(3, np.zeros(2))

    @pytest.mark.parametrize("model", MODELS)
    def test_response_matches_dense(self, model):
        """Closed-form response equals the response of the dense filter."""
        n = 5
        h = sample_one_hop(n, seed=3)
        dense = dense_frequency_response(one_hop_to_dense(h), model)
        for r in range(1 << n):
            b = from_lex_rank(r, n)
            assert frequency_response(h, b, model) == pytest.approx(dense.values[r], abs=1e-12)

    @pytest.mark.parametrize("model", MODELS)
    def test_response_many(self, model):
        """Vectorised responses agree with the scalar version."""
        h = sample_one_hop(6, seed=8)
        masks = [0, 1, 5, 0b101010, 63]
        np.testing.assert_allclose(
            frequency_response_many(h, masks, model),
            [frequency_response(h, b, model) for b in masks],
            atol=1e-12,
        )

    def test_coefficients_are_standard_normal(self):
        """10^4 pooled singleton coefficients have mean 0 and variance 1."""
        pooled = np.concatenate([sample_one_hop(100, seed=seed).singleton_coeffs for seed in range(100)])
        assert pooled.shape == (10_000,)
        assert abs(pooled.mean()) < 0.05
        assert abs(pooled.var() - 1.0) < 0.05

    @pytest.mark.parametrize("model", MODELS)
    def test_response_never_zero(self, model):
        """Sampled filters do not annihilate any frequency."""
        n = 7
        masks = range(1 << n)
        for seed in range(200):
            responses = frequency_response_many(sample_one_hop(n, seed=seed), masks, model)
            assert np.all(responses != 0.0)


class TestConvolution:
    """Dense convolution and the convolution theorem."""

    @pytest.mark.parametrize("model", MODELS)
    def test_convolution_theorem(self, model):
        """FT(h * s) == h_bar * s_hat for random dense h and s."""
        rng = make_rng(17)
        for n in range(1, 7):
            for _ in range(8):
                h = random_dense(rng, n)
                s = random_dense(rng, n)
                direct = dense_convolve(h, s, model)
                expected = dense_frequency_response(h, model).values * dense_ft(s, model).values
                np.testing.assert_allclose(dense_ft(direct, model).values, expected, atol=1e-9)

    @pytest.mark.parametrize("model", MODELS)
    def test_spectral_matches_direct(self, model):
        """spectral_convolve equals dense_convolve."""
        rng = make_rng(5)
        h, s = random_dense(rng, 5), random_dense(rng, 5)
        assert spectral_convolve(h, s, model).allclose(dense_convolve(h, s, model), atol=1e-9)

    def test_identity_delta(self):
        """Convolving with the delta at the empty set is the identity."""
        rng = make_rng(1)
        s = random_dense(rng, 4)
        delta = np.zeros(16)
        delta[0] = 1.0
        for model in MODELS:
            assert dense_convolve(DenseSetFunction(4, delta), s, model).allclose(s, atol=0.0)


class TestFilteredOracle:
    """Filtered oracles against dense convolution."""

    @pytest.mark.parametrize("model", MODELS)
    def test_matches_dense_convolution(self, model):
        """The filtered oracle evaluates h * s."""
        rng = make_rng(23)
        n = 5
        s = random_dense(rng, n)
        h = sample_one_hop(n, seed=2)
        oracle = filtered_oracle(h, oracle_from_dense(s), model)
        expected = dense_convolve(one_hop_to_dense(h), s, model)
        assert densify(oracle).allclose(expected, atol=1e-9)

    def test_union_convolution_theorem(self):
        """Model 4: FT of the filtered function is h_bar * s_hat on random pairs."""
        rng = make_rng(31)
        for trial in range(50):
            n = int(rng.integers(1, 9))
            s = random_dense(rng, n)
            h = sample_one_hop(n, seed=trial)
            filtered = densify(filtered_oracle(h, oracle_from_dense(s), ModelId.UNION))
            spectrum = dense_ft(s, ModelId.UNION).values
            response = frequency_response_many(h, [from_lex_rank(r, n) for r in range(1 << n)], ModelId.UNION)
            np.testing.assert_allclose(dense_ft(filtered, ModelId.UNION).values, response * spectrum, atol=1e-9)

    @pytest.mark.parametrize(
        "model, expected",
        [
            (ModelId.UNION, lambda n, a: 1 + n - a),
            (ModelId.DIFFERENCE, lambda n, a: 1 + a),
            (ModelId.WHT, lambda n, a: 1 + n),
        ],
    )
    def test_query_count_per_evaluation(self, model, expected):
        """Underlying queries per filtered evaluation depend on |A| as the shift dictates."""
        n = 6
        inner = oracle_from_dense(DenseSetFunction.zeros(n))
        oracle = filtered_oracle(sample_one_hop(n, seed=0), inner, model)
        for bits in [0, 1, 0b110, 0b101101, 63]:
            before = inner.query_count
            oracle.eval(bits)
            assert inner.query_count - before == expected(n, popcount(bits))
        assert oracle.query_count == 5

    def test_clone_clones_inner(self):
        """A clone owns a fresh inner oracle."""
        inner = oracle_from_dense(DenseSetFunction.zeros(3))
        oracle = filtered_oracle(sample_one_hop(3, seed=0), inner, ModelId.UNION)
        twin = oracle.clone()
        twin.eval(0)
        assert inner.query_count == 0
        assert twin.inner.query_count == 4

    def test_ground_set_mismatch(self):
        """Filter and oracle must share n."""
        with pytest.raises(InvalidInputError):
            filtered_oracle(sample_one_hop(3, seed=0), oracle_from_dense(DenseSetFunction.zeros(4)), 4)

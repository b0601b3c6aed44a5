"""
Tests for the sampled error metric, greedy maximisation and the experiment harness.
"""

import itertools
import math

import pytest
from pathlib import Path

import numpy as np

import sys
sys.path.insert(0, str(Path(__file__).parent.parent))

from core import CallableOracle, InvalidInputError, ModelId, RecoveryError, SparseFT, UndefinedErrorEstimate, popcount
from evaluation import (
    greedy_maximize,
    random_placement,
    relative_error,
    run_experiment,
    run_repetition,
    sample_sets,
    summarize_rows,
)
from generators import coverage_oracle, information_gain_oracle, random_coverage_spec, random_sparse_oracle
from models import ExperimentTask, SsftConfig, ValidationStatus
from ssft import ssft
from transforms import SparseOracle


def _scaled(ft: SparseFT, factor: float) -> SparseFT:
    return SparseFT(ft.n, ft.model, {b: factor * v for b, v in ft.items()})


class TestRelativeError:
    """Sampled ||p - p'|| / ||p||."""

    def test_exact_estimate(self):
        """The true spectrum has zero error."""
        oracle, ft = random_sparse_oracle(12, 10, seed=1)
        estimate = relative_error(oracle, ft, num_samples=500, seed=0)
        assert estimate.relative_error == pytest.approx(0.0, abs=1e-12)
        assert estimate.num_samples == 500
        assert estimate.seed == 0

    def test_empty_estimate(self):
        """The empty spectrum has error one."""
        oracle, _ = random_sparse_oracle(12, 10, seed=1)
        estimate = relative_error(oracle, SparseFT.empty(12, ModelId.UNION), num_samples=500, seed=0)
        assert estimate.relative_error == pytest.approx(1.0)

    def test_scale_invariant(self):
        """Scaling truth and estimate together leaves the error unchanged."""
        _, truth = random_sparse_oracle(10, 8, seed=2)
        _, other = random_sparse_oracle(10, 8, seed=3)
        base = relative_error(SparseOracle(truth), other, num_samples=400, seed=5).relative_error
        scaled = relative_error(SparseOracle(_scaled(truth, 7.5)), _scaled(other, 7.5), num_samples=400, seed=5)
        assert scaled.relative_error == pytest.approx(base, rel=1e-9)

    def test_caller_counter_untouched(self):
        """Queries go to a clone."""
        oracle, ft = random_sparse_oracle(8, 4, seed=0)
        relative_error(oracle, ft, num_samples=100, seed=0)
        assert oracle.query_count == 0

    def test_undefined_when_truth_vanishes(self):
        """A truth that is zero on every sample has no relative error."""
        zero = CallableOracle(6, lambda bits: 0.0)
        with pytest.raises(UndefinedErrorEstimate):
            relative_error(zero, SparseFT.empty(6, ModelId.UNION), num_samples=50, seed=0)

    def test_ground_set_mismatch(self):
        oracle, _ = random_sparse_oracle(6, 2, seed=0)
        with pytest.raises(InvalidInputError):
            relative_error(oracle, SparseFT.empty(7, ModelId.UNION), num_samples=10, seed=0)

    def test_samples_are_seeded(self):
        """Equal seeds draw equal sets."""
        np.testing.assert_array_equal(sample_sets(20, 9, seed=4), sample_sets(20, 9, seed=4))


class TestGreedy:
    """Greedy maximisation with |A| <= d."""

    def test_modular_top_d(self):
        """On a modular function greedy picks the d largest weights."""
        weights = [0.3, 2.0, -1.0, 1.5, 0.9]
        oracle = CallableOracle(5, lambda bits: sum(w for i, w in enumerate(weights) if bits >> i & 1))
        result = greedy_maximize(oracle, 3)
        assert result.selection == [2, 4, 5]
        assert result.value == pytest.approx(4.4)

    def test_ties_take_smallest_index(self):
        """Identity covariance: every gain ties, so the selection is 1, 2, 3."""
        result = greedy_maximize(information_gain_oracle(np.eye(6)), 3)
        assert result.selection == [1, 2, 3]
        assert result.value == pytest.approx(1.5 * math.log(2.0))

    def test_coverage_guarantee(self):
        """Greedy reaches (1 - 1/e) of the best d-subset on a coverage function."""
        n, d = 8, 3
        spec = random_coverage_spec(n, 15, seed=7)
        oracle = coverage_oracle(spec)
        best = max(
            oracle.eval(sum(1 << i for i in chosen)) for chosen in itertools.combinations(range(n), d)
        )
        result = greedy_maximize(coverage_oracle(spec), d)
        assert result.value >= (1.0 - 1.0 / math.e) * best - 1e-12

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_lazy_matches_plain(self, seed):
        """Lazy evaluation picks the same sets on submodular functions."""
        spec = random_coverage_spec(10, 20, seed=seed)
        plain = greedy_maximize(coverage_oracle(spec), 4)
        lazy = greedy_maximize(coverage_oracle(spec), 4, lazy=True)
        assert lazy.selection == plain.selection
        assert lazy.value == pytest.approx(plain.value)
        assert lazy.lazy

    def test_evaluation_count(self):
        """Plain greedy: one base query, n - r candidates per round, one final value."""
        n, d = 6, 3
        oracle, _ = random_sparse_oracle(n, 5, seed=3)
        result = greedy_maximize(oracle, d)
        assert result.evaluations == 1 + sum(n - r for r in range(d)) + 1
        assert oracle.query_count == result.evaluations

    def test_sparse_surrogate(self):
        """A spectrum is maximised through its sparse oracle."""
        oracle, ft = random_sparse_oracle(7, 6, seed=4)
        assert greedy_maximize(ft, 2).selection == greedy_maximize(oracle, 2).selection

    @pytest.mark.parametrize("d", range(1, 9))
    def test_learned_surrogate_every_budget(self, d):
        """Greedy on a learned spectrum reaches the true greedy value for every d <= n."""
        n = 8
        oracle, _ = random_sparse_oracle(n, 10, seed=11)
        learned = ssft(oracle.clone(), n, SsftConfig(seed=0)).result
        on_truth = greedy_maximize(oracle.clone(), d)
        on_surrogate = greedy_maximize(learned, d)
        chosen = sum(1 << (i - 1) for i in on_surrogate.selection)
        assert len(on_surrogate.selection) == d
        assert oracle.eval(chosen) == pytest.approx(on_truth.value, abs=1e-9)

    def test_invalid_budget(self):
        oracle, _ = random_sparse_oracle(4, 2, seed=0)
        with pytest.raises(InvalidInputError):
            greedy_maximize(oracle, 5)

    def test_random_placement(self):
        """A seeded d-subset."""
        bits = random_placement(10, 4, seed=1)
        assert popcount(bits) == 4
        assert bits == random_placement(10, 4, seed=1)


class TestExperiment:
    """Experiment rows and summaries."""

    def test_experiment_threshold(self):
        """Tasks run with the looser experiment threshold unless they set one."""
        assert ExperimentTask(oracle="cut:path3").ssft_config(0).epsilon == 1e-3
        assert ExperimentTask(oracle="cut:path3", epsilon=1e-8).ssft_config(0).epsilon == 1e-8

    def test_root_default_and_override(self):
        task = ExperimentTask(oracle="facility:n=6,L=2")
        assert task.ssft_config(0, keep_root_default=True).keep_root
        assert not task.ssft_config(0).keep_root
        pinned = ExperimentTask(oracle="facility:n=6,L=2", keep_root=False)
        assert not pinned.ssft_config(0, keep_root_default=True).keep_root

    def test_rows_per_repetition(self):
        """Repetition r uses seed + r and recovers a random function exactly."""
        task = ExperimentTask(
            oracle="random-sparse:n=8,k=5", repetitions=3, seed=10, num_samples=200, epsilon=1e-8
        )
        rows = run_experiment(task)
        assert [row.seed for row in rows] == [10, 11, 12]
        for row in rows:
            assert row.succeeded
            assert row.k == 5
            assert row.rel_error == pytest.approx(0.0, abs=1e-9)
            assert row.validation_flag == ValidationStatus.OK

    def test_facility_recovered_with_defaults(self):
        """Facility location at n=20 is learned exactly without pinning keep_root."""
        task = ExperimentTask(oracle="facility:n=20,L=4", repetitions=2, seed=5, num_samples=300, epsilon=1e-8)
        for row in run_experiment(task):
            assert row.succeeded
            assert row.k > 1
            assert row.rel_error == pytest.approx(0.0, abs=1e-9)
            assert row.validation_flag == ValidationStatus.OK

    def test_plain_ssft_flags_cut(self):
        """Plain SSFT misses the path cut; the row is flagged with error one."""
        task = ExperimentTask(oracle="cut:path3", num_samples=200)
        row = run_repetition(task, 0)
        assert row.k == 0
        assert row.rel_error == pytest.approx(1.0)
        assert row.validation_flag == ValidationStatus.FLAG
        assert "support" in row.notes

    def test_ssft_plus_on_cut(self):
        """SSFT+ recovers the path cut inside the harness."""
        task = ExperimentTask(oracle="cut:path3", learner="ssft_plus", num_samples=200)
        row = run_repetition(task, 0)
        assert row.k == 5
        assert row.rel_error == pytest.approx(0.0, abs=1e-9)
        assert row.validation_flag == ValidationStatus.OK

    def test_greedy_columns(self):
        """greedy_d fills the three greedy columns; coverage keeps its root by default."""
        task = ExperimentTask(oracle="coverage:n=8,universe=12", greedy_d=3, num_samples=200, seed=2)
        row = run_repetition(task, 0)
        assert row.k > 0
        assert row.greedy_true is not None
        assert row.greedy_surrogate == pytest.approx(row.greedy_true)
        assert row.greedy_random is not None

    def test_failure_is_recorded(self, monkeypatch):
        """A RecoveryError becomes a flagged row instead of aborting the run."""
        def failing(*args, **kwargs):
            raise RecoveryError("singular system")

        monkeypatch.setattr("evaluation.experiment.ssft", failing)
        rows = run_experiment(ExperimentTask(oracle="random-sparse:n=5,k=3", repetitions=2, num_samples=50))
        assert all(not row.succeeded for row in rows)
        assert all(math.isnan(row.rel_error) for row in rows)
        assert rows[0].error == "singular system"
        assert rows[0].validation_flag == ValidationStatus.FLAG

        summary = summarize_rows(rows)
        assert summary.failures == 2
        assert summary.mean_rel_error is None

    def test_summary_means(self):
        """Means are taken over successful rows only."""
        rows = run_experiment(
            ExperimentTask(oracle="random-sparse:n=6,k=4", repetitions=2, num_samples=100, epsilon=1e-8)
        )
        summary = summarize_rows(rows)
        assert summary.repetitions == 2
        assert summary.failures == 0
        assert summary.mean_k == pytest.approx(4.0)
        assert summary.mean_queries == pytest.approx(sum(row.queries for row in rows) / 2)

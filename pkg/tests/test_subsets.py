"""
Tests for subset algebra, ordering, oracles and dense functions.
"""

import pytest
from pathlib import Path

import numpy as np

import sys
sys.path.insert(0, str(Path(__file__).parent.parent))

from core import (
    CallableOracle,
    CapacityError,
    DenseSetFunction,
    InvalidInputError,
    SubsetMask,
    densify,
    from_lex_rank,
    lex_rank,
    make_rng,
    oracle_from_dense,
)
from core.subsets import (
    disjoint_matrix,
    lex_indicators,
    masks_to_indicators,
    masks_to_words,
    parity_matrix,
    sample_distinct_masks,
    subset_matrix,
)
from models import GroundSet


class TestSubsetAlgebra:
    """Tests for SubsetMask set operations."""

    def test_union(self):
        """{x1} | {x3} over n=3 is {x1, x3}."""
        a = SubsetMask.from_elements([1], 3)
        b = SubsetMask.from_elements([3], 3)
        assert (a | b).elements == [1, 3]
        assert a.union(b) == SubsetMask.from_elements([1, 3], 3)

    def test_complement(self):
        """Complement of {x2} over n=3 is {x1, x3}."""
        assert (~SubsetMask.from_elements([2], 3)).elements == [1, 3]

    def test_intersection_difference_xor(self):
        """Intersection, difference and symmetric difference."""
        a = SubsetMask.from_elements([1, 2], 4)
        b = SubsetMask.from_elements([2, 4], 4)
        assert (a & b).elements == [2]
        assert (a - b).elements == [1]
        assert (a ^ b).elements == [1, 4]

    def test_subset_and_membership(self):
        """Inclusion, membership, cardinality and iteration."""
        a = SubsetMask.from_elements([2], 3)
        b = SubsetMask.from_elements([2, 3], 3)
        assert a <= b
        assert not b <= a
        assert 3 in b and 1 not in b
        assert len(b) == 2
        assert list(b) == [2, 3]
        assert str(SubsetMask.empty(3)) == "{}"
        assert str(b) == "{x2,x3}"

    def test_mismatched_ground_sets(self):
        """Mixing ground sets raises."""
        with pytest.raises(InvalidInputError):
            SubsetMask.from_elements([1], 3) | SubsetMask.from_elements([1], 4)

    def test_out_of_range(self):
        """Bits beyond n are rejected."""
        with pytest.raises(InvalidInputError):
            SubsetMask(1 << 3, 3)
        with pytest.raises(InvalidInputError):
            SubsetMask.from_elements([4], 3)

    def test_large_ground_set(self):
        """Masks are not limited to a machine word."""
        a = SubsetMask.from_elements([1, 500], 500)
        assert a.cardinality == 2
        assert (~a).cardinality == 498


class TestLexicographicRank:
    """Tests for the rank order."""

    def test_rank_examples(self):
        """rank(empty)=0, rank({x_n})=1, rank(N)=2^n-1."""
        n = 5
        assert SubsetMask.empty(n).rank == 0
        assert SubsetMask.from_elements([n], n).rank == 1
        assert SubsetMask.full(n).rank == (1 << n) - 1
        assert SubsetMask.from_elements([1], n).rank == 1 << (n - 1)

    def test_rank_bijection(self):
        """Rank is a bijection with inverse from_lex_rank."""
        n = 6
        ranks = {lex_rank(bits, n) for bits in range(1 << n)}
        assert ranks == set(range(1 << n))
        for r in range(1 << n):
            assert lex_rank(from_lex_rank(r, n), n) == r

    def test_rank_matches_indicator_order(self):
        """Rank order equals lexicographic order of indicator vectors."""
        n = 4
        indicators = masks_to_indicators(list(range(1 << n)), n).astype(int)
        by_rank = sorted(range(1 << n), key=lambda bits: lex_rank(bits, n))
        vectors = [tuple(indicators[bits]) for bits in by_rank]
        assert vectors == sorted(vectors)

    def test_lex_indicators(self):
        """lex_indicators lists sets in rank order."""
        n = 3
        rows = lex_indicators(n)
        assert rows.shape == (8, 3)
        assert rows[1].tolist() == [False, False, True]
        assert rows[4].tolist() == [True, False, False]


class TestPairwiseMatrices:
    """Tests for packed-word relation matrices."""

    def test_relations_match_python(self):
        """Subset, disjointness and parity agree with int arithmetic."""
        n = 70
        rng = make_rng(3)
        rows = [int(rng.integers(0, 1 << 62)) << 8 | int(rng.integers(0, 256)) for _ in range(12)]
        cols = [int(rng.integers(0, 1 << 62)) << 8 | int(rng.integers(0, 256)) for _ in range(9)]
        rows = [r & ((1 << n) - 1) for r in rows]
        cols = [c & ((1 << n) - 1) for c in cols]
        rw, cw = masks_to_words(rows, n), masks_to_words(cols, n)

        sub = subset_matrix(rw, cw)
        dis = disjoint_matrix(rw, cw)
        par = parity_matrix(rw, cw)
        for i, r in enumerate(rows):
            for j, c in enumerate(cols):
                assert sub[i, j] == (c & ~r == 0)
                assert dis[i, j] == (r & c == 0)
                assert par[i, j] == (bin(r & c).count("1") % 2 == 1)

    def test_sample_distinct_masks(self):
        """Distinct masks inside the requested width."""
        rng = make_rng(1)
        for width, count in [(3, 8), (10, 40), (40, 100)]:
            masks = sample_distinct_masks(rng, width, count)
            assert len(masks) == len(set(masks)) == count
            assert all(0 <= m < 1 << width for m in masks)
        with pytest.raises(InvalidInputError):
            sample_distinct_masks(rng, 2, 5)


class TestOracles:
    """Tests for counting oracles and dense functions."""

    def test_oracle_from_dense(self):
        """Dense (0, 1) over n=1 evaluates to 1 at {x1}."""
        oracle = oracle_from_dense(DenseSetFunction(1, np.array([0.0, 1.0])))
        assert oracle.eval(SubsetMask.from_elements([1], 1)) == 1.0
        assert oracle.query_count == 1

    def test_query_counter(self):
        """Five evaluations leave the counter at five."""
        oracle = oracle_from_dense(DenseSetFunction(2, np.arange(4.0)))
        for bits in [0, 1, 2, 3, 1]:
            oracle.eval(bits)
        assert oracle.query_count == 5

    def test_cut_values(self, path3_cut):
        """The path cut vector has cut({x2}) = 2."""
        oracle = oracle_from_dense(path3_cut)
        assert oracle.eval(SubsetMask.from_elements([2], 3)) == 2.0

    def test_eval_many_counts_rows(self):
        """Batch evaluation counts one query per row and matches eval."""
        f = DenseSetFunction(3, np.arange(8.0))
        oracle = oracle_from_dense(f)
        rows = masks_to_indicators([0, 1, 5, 7], 3)
        values = oracle.eval_many(rows)
        assert oracle.query_count == 4
        assert values.tolist() == [f[0], f[1], f[5], f[7]]

    def test_clone_resets_counter(self):
        """Clones are independent with a fresh counter."""
        oracle = CallableOracle(3, lambda bits: float(bits))
        oracle.eval(1)
        twin = oracle.clone()
        assert twin.query_count == 0
        twin.eval(2)
        assert oracle.query_count == 1

    def test_densify_round_trip(self):
        """densify(oracle_from_dense(f)) == f."""
        f = DenseSetFunction(4, make_rng(0).standard_normal(16))
        assert densify(oracle_from_dense(f), batch_size=5).allclose(f, atol=0.0, rtol=0.0)

    def test_dense_length_checked(self):
        """Wrong vector length is rejected."""
        with pytest.raises(InvalidInputError):
            DenseSetFunction(3, np.zeros(7))
        with pytest.raises(InvalidInputError):
            DenseSetFunction.from_values(np.zeros(6))

    def test_dense_capacity(self):
        """Ground sets beyond the dense limit raise CapacityError."""
        with pytest.raises(CapacityError):
            DenseSetFunction.zeros(64)


class TestGroundSet:
    """Tests for labelled ground sets."""

    def test_labels(self):
        """Labels translate to masks and back."""
        ground = GroundSet(n=3, labels=["a", "b", "c"])
        mask = ground.mask_from_labels(["c", "a"])
        assert mask.elements == [1, 3]
        assert ground.labels_of(mask) == ["a", "c"]

    def test_default_labels(self):
        """Unlabelled elements are called x1..xn."""
        assert GroundSet(n=2).labels_of(SubsetMask.full(2)) == ["x1", "x2"]

    def test_duplicate_labels(self):
        """Duplicate labels are rejected."""
        with pytest.raises(ValueError):
            GroundSet(n=2, labels=["a", "a"])

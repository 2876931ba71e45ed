import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netconsist.graph import Partition
from netconsist.similarity import (
    copair_set,
    jaccard_similarity,
    pairwise_jaccard,
    similarity_weights,
)

from conftest import random_partition
from oracles import copairs_brute, jaccard_brute

SPLIT_5_4 = Partition((0,) * 5 + (1,) * 4)  # 5-node + 4-node communities
MERGED_9 = Partition((0,) * 9)  # the 9-node merge


class TestCopairSet:
    def test_all_singletons_empty(self):
        assert copair_set(Partition((0, 1, 2, 3))) == frozenset()

    def test_nine_node_community(self):
        assert len(copair_set(MERGED_9)) == 36

    def test_five_four_split(self):
        pairs = copair_set(SPLIT_5_4)
        assert len(pairs) == 10 + 6
        assert pairs == frozenset(copairs_brute(SPLIT_5_4))

    @given(labels=st.lists(st.integers(0, 5), min_size=1, max_size=16))
    @settings(max_examples=100, deadline=None)
    def test_size_formula(self, labels):
        p = Partition.from_labels(labels)
        sizes = p.sizes()
        assert len(copair_set(p)) == sum(int(s) * (int(s) - 1) // 2 for s in sizes)


class TestJaccard:
    def test_identical_partitions(self):
        assert jaccard_similarity(SPLIT_5_4, SPLIT_5_4) == 1.0

    def test_split_vs_merged_configuration(self):
        assert jaccard_similarity(SPLIT_5_4, MERGED_9) == pytest.approx(
            16 / 36, abs=1e-15
        )

    def test_disjoint_copair_sets(self):
        a = Partition((0, 0, 1, 1))
        b = Partition((0, 1, 0, 1))
        assert jaccard_similarity(a, b) == 0.0

    def test_both_empty_defined_as_one(self):
        a = Partition((0, 1, 2))
        b = Partition((0, 1, 2))
        assert jaccard_similarity(a, b) == 1.0

    def test_mismatched_sizes_error(self):
        with pytest.raises(ValueError):
            jaccard_similarity(Partition((0, 0)), Partition((0, 0, 0)))

    def test_matches_brute_force(self, rng):
        for _ in range(50):
            a = random_partition(rng, 10, 4)
            b = random_partition(rng, 10, 4)
            assert jaccard_similarity(a, b) == pytest.approx(
                jaccard_brute(a, b), abs=1e-15
            )

    @given(
        la=st.lists(st.integers(0, 4), min_size=2, max_size=12),
        shift=st.integers(1, 4),
    )
    @settings(max_examples=100, deadline=None)
    def test_symmetry_and_relabel_invariance(self, la, shift):
        a = Partition.from_labels(la)
        b = Partition.from_labels(list(reversed(la)))
        assert jaccard_similarity(a, b) == jaccard_similarity(b, a)
        relabeled = Partition.from_labels(
            [(c + shift) % a.community_count for c in a.membership]
        )
        assert jaccard_similarity(a, relabeled) == 1.0


class TestPairwiseJaccard:
    def test_identical_partitions(self):
        j = pairwise_jaccard([SPLIT_5_4] * 4)
        assert np.array_equal(np.diag(j), np.zeros(4))
        off = j[~np.eye(4, dtype=bool)]
        assert np.all(off == 1.0)

    def test_two_partitions(self):
        j = pairwise_jaccard([SPLIT_5_4, MERGED_9])
        assert j[0, 1] == j[1, 0] == pytest.approx(16 / 36, abs=1e-15)
        assert j[0, 0] == j[1, 1] == 0.0

    def test_matches_independent_calls(self, rng):
        parts = [random_partition(rng, 8, 4) for _ in range(5)]
        j = pairwise_jaccard(parts)
        for c in range(5):
            for d in range(c + 1, 5):
                assert j[c, d] == jaccard_similarity(parts[c], parts[d])
        assert np.allclose(j, j.T)

    def test_needs_two(self):
        with pytest.raises(ValueError):
            pairwise_jaccard([SPLIT_5_4])


class TestSimilarityWeights:
    def test_identical_partitions_uniform(self):
        w = similarity_weights(pairwise_jaccard([SPLIT_5_4] * 5))
        assert np.allclose(w, 0.2, atol=1e-15)

    def test_column_sum_arithmetic(self):
        j = np.array([[0, 1, 1], [1, 0, 0], [1, 0, 0]], dtype=float)
        assert np.allclose(similarity_weights(j), [0.5, 0.25, 0.25], atol=1e-15)

    def test_all_zero_uniform(self):
        assert np.allclose(similarity_weights(np.zeros((3, 3))), 1 / 3)

    def test_sums_to_one_and_preserves_order(self, rng):
        for _ in range(20):
            parts = [random_partition(rng, 12, 4) for _ in range(4)]
            j = pairwise_jaccard(parts)
            w = similarity_weights(j)
            assert w.sum() == pytest.approx(1.0, abs=1e-12)
            col = j.sum(axis=0)
            assert np.array_equal(np.argsort(col), np.argsort(w))

"""Partition similarity via co-membership node pairs.

Two partitions are compared through the sets of unordered node pairs that
share a community; the Jaccard index of those sets does not depend on the
arbitrary numbering of communities. Pair-set sizes are computed from the
contingency table (never materializing O(v^2) structures), which is
equivalent to explicit pair enumeration.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .graph import Partition

__all__ = [
    "copair_set",
    "jaccard_similarity",
    "pairwise_jaccard",
    "similarity_weights",
]


def copair_set(partition: Partition) -> frozenset[tuple[int, int]]:
    """Unordered within-community node pairs (q, r) with q < r."""
    pairs = set()
    for members in partition.communities():
        nodes = sorted(members)
        for i, q in enumerate(nodes):
            for r in nodes[i + 1 :]:
                pairs.add((q, r))
    return frozenset(pairs)


def _pair_count(sizes) -> int:
    return int(sum(s * (s - 1) // 2 for s in sizes))


def jaccard_similarity(a: Partition, b: Partition) -> float:
    """|S_a & S_b| / |S_a | S_b| over co-membership pair sets.

    Defined as 1.0 when both pair sets are empty (two all-singleton
    partitions have identical structure).
    """
    if a.node_count != b.node_count:
        raise ValueError(
            f"partitions cover {a.node_count} vs {b.node_count} nodes"
        )
    pairs_a = _pair_count(a.sizes())
    pairs_b = _pair_count(b.sizes())
    contingency = Counter(zip(a.membership, b.membership))
    inter = _pair_count(contingency.values())
    union = pairs_a + pairs_b - inter
    if union == 0:
        return 1.0
    return inter / union


def pairwise_jaccard(partitions: list[Partition]) -> np.ndarray:
    """All-pairs Jaccard matrix with an exactly-zero diagonal."""
    n = len(partitions)
    if n < 2:
        raise ValueError("pairwise Jaccard needs at least 2 partitions")
    j = np.zeros((n, n))
    for c in range(n):
        for d in range(c + 1, n):
            val = jaccard_similarity(partitions[c], partitions[d])
            j[c, d] = j[d, c] = val
    return j


def similarity_weights(j: np.ndarray) -> np.ndarray:
    """Normalized column sums of the Jaccard matrix.

    Weights are nonnegative and sum to 1. A degenerate all-zero matrix
    yields uniform weights.
    """
    j = np.asarray(j, dtype=float)
    if j.ndim != 2 or j.shape[0] != j.shape[1] or j.shape[0] < 2:
        raise ValueError("expected a square matrix of size >= 2")
    col_sums = j.sum(axis=0)
    total = col_sums.sum()
    if total == 0:
        return np.full(j.shape[0], 1.0 / j.shape[0])
    return col_sums / total

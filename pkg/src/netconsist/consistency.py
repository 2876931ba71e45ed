"""Community overlap scoring and node-level consistency maps.

A compared partition is scored against a reference through the
community-by-community overlap matrix

    X[p, q] = (|A_p & R_q| / |A_p|) * (|A_p & R_q| / |R_q|)

where A_p are the compared partition's communities and R_q the reference's.
The product form penalizes poor specificity harder than intersection over
union. Node scores accumulate over comparisons into a length-v vector; three
schemes are provided: binary exclusivity (column best match only), binary
inclusivity (every overlap above a threshold), and scaled inclusivity
(accumulate the X value itself).

Intersections are exact integer counts; each X entry is produced by a
single division, so results are bit-identical across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Partition

__all__ = [
    "OverlapMatrix",
    "ConsistencyMap",
    "overlap_matrix",
    "binary_exclusivity",
    "binary_inclusivity",
    "scaled_inclusivity",
]

SCHEMES = ("binary_exclusive", "binary_inclusive", "scaled")


@dataclass(frozen=True)
class OverlapMatrix:
    values: np.ndarray  # shape (y, z), entries in [0, 1]
    row_sets: tuple[frozenset[int], ...]  # compared communities A_p
    col_sets: tuple[frozenset[int], ...]  # reference communities R_q


@dataclass(frozen=True)
class ConsistencyMap:
    scores: np.ndarray  # length v
    scheme: str
    reference_index: int
    comparisons: int  # number of non-reference partitions aggregated


def _check_universe(compared: Partition, reference: Partition) -> None:
    if compared.node_count != reference.node_count:
        raise ValueError(
            f"partitions cover {compared.node_count} vs "
            f"{reference.node_count} nodes"
        )


def _intersections(compared: Partition, reference: Partition) -> np.ndarray:
    """Integer contingency counts |A_p & R_q|, shape (y, z)."""
    counts = np.zeros(
        (compared.community_count, reference.community_count), dtype=np.int64
    )
    for p, q in zip(compared.membership, reference.membership):
        counts[p, q] += 1
    return counts


def _overlap_values(compared: Partition, reference: Partition) -> np.ndarray:
    inter = _intersections(compared, reference)
    row_sizes = compared.sizes()[:, None]
    col_sizes = reference.sizes()[None, :]
    return (inter * inter) / (row_sizes * col_sizes)


def overlap_matrix(compared: Partition, reference: Partition) -> OverlapMatrix:
    """Product-of-intersection-fractions overlap between community pairs."""
    _check_universe(compared, reference)
    return OverlapMatrix(
        values=_overlap_values(compared, reference),
        row_sets=tuple(compared.communities()),
        col_sets=tuple(reference.communities()),
    )


def _accumulate(
    others: list[Partition],
    reference: Partition,
    contribution,
) -> np.ndarray:
    if not others:
        raise ValueError("need at least one non-reference partition")
    scores = np.zeros(reference.node_count)
    for compared in others:
        _check_universe(compared, reference)
        scores += contribution(compared)
    return scores


def binary_exclusivity(
    others: list[Partition], reference: Partition, reference_index: int = 0
) -> ConsistencyMap:
    """+1 to every node of the compared community that best matches each
    reference community (column maximum of X; ties to the lowest row index).

    A node can earn more than one point per comparison if its community is
    the best match for several reference communities.
    """

    def contribution(compared: Partition) -> np.ndarray:
        x = _overlap_values(compared, reference)
        best_rows = np.argmax(x, axis=0)  # first occurrence = lowest index
        mem = np.asarray(compared.membership)
        add = np.zeros(reference.node_count)
        for p in best_rows:
            add[mem == p] += 1.0
        return add

    scores = _accumulate(others, reference, contribution)
    return ConsistencyMap(scores, "binary_exclusive", reference_index, len(others))


def binary_inclusivity(
    others: list[Partition],
    reference: Partition,
    threshold: float = 0.0,
    reference_index: int = 0,
) -> ConsistencyMap:
    """+1 to the nodes of A_p & R_q for every pair with X[p, q] > threshold.

    With the default threshold 0, any overlap counts, so every node gains
    exactly one point per comparison.
    """
    if not (0.0 <= threshold <= 1.0):
        raise ValueError(f"threshold must be in [0, 1], got {threshold}")

    def contribution(compared: Partition) -> np.ndarray:
        x = _overlap_values(compared, reference)
        mem_c = np.asarray(compared.membership)
        mem_r = np.asarray(reference.membership)
        # A node sits in exactly one (A_p, R_q) intersection: its own pair.
        return (x[mem_c, mem_r] > threshold).astype(float)

    scores = _accumulate(others, reference, contribution)
    return ConsistencyMap(scores, "binary_inclusive", reference_index, len(others))


def scaled_inclusivity(
    others: list[Partition], reference: Partition, reference_index: int = 0
) -> ConsistencyMap:
    """Accumulate X[p, q] onto the nodes of A_p & R_q for every overlapping
    pair. Each comparison adds exactly one value in [0, 1] per node, so the
    ceiling over n partitions is n - 1.
    """

    def contribution(compared: Partition) -> np.ndarray:
        x = _overlap_values(compared, reference)
        mem_c = np.asarray(compared.membership)
        mem_r = np.asarray(reference.membership)
        return x[mem_c, mem_r]

    scores = _accumulate(others, reference, contribution)
    return ConsistencyMap(scores, "scaled", reference_index, len(others))

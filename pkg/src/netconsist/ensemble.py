"""Ensemble-level consistency summaries.

Three views over an ensemble of n best partitions:

* weighted average map: each partition serves as reference in turn; the n
  scaled maps are combined with weights proportional to each partition's
  summed Jaccard similarity to the rest of the group;
* argmax reference map: per node, which reference (1-based) yields the
  highest scaled score, ties to the earliest index;
* signed per-community map: for one reference community R_q, overlapping
  compared communities add their X value inside R_q and subtract it
  outside, so referent-only misclassifications show up as negative scores.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .consistency import ConsistencyMap, _overlap_values, scaled_inclusivity
from .graph import Partition
from .similarity import pairwise_jaccard, similarity_weights

__all__ = [
    "WeightedAverageMap",
    "ArgmaxReferenceMap",
    "SignedCommunityMap",
    "per_reference_maps",
    "weighted_average_map",
    "argmax_reference_map",
    "signed_community_map",
]


@dataclass(frozen=True)
class WeightedAverageMap:
    scores: np.ndarray
    weights: np.ndarray
    per_reference_maps: tuple[ConsistencyMap, ...]


@dataclass(frozen=True)
class ArgmaxReferenceMap:
    best_reference: np.ndarray  # 1-based realization index per node
    best_score: np.ndarray


@dataclass(frozen=True)
class SignedCommunityMap:
    scores: np.ndarray
    reference_index: int
    community_id: int


def _check_ensemble(partitions: list[Partition]) -> None:
    if len(partitions) < 2:
        raise ValueError("ensemble requires n >= 2 partitions")
    v = partitions[0].node_count
    if any(p.node_count != v for p in partitions):
        raise ValueError("all partitions must cover the same node universe")


def per_reference_maps(partitions: list[Partition]) -> tuple[ConsistencyMap, ...]:
    """Scaled map for every choice of reference; reference i aggregates the
    other n - 1 partitions."""
    _check_ensemble(partitions)
    maps = []
    for i, reference in enumerate(partitions):
        others = partitions[:i] + partitions[i + 1 :]
        maps.append(scaled_inclusivity(others, reference, reference_index=i))
    return tuple(maps)


def weighted_average_map(partitions: list[Partition]) -> WeightedAverageMap:
    """Jaccard-weighted average of the n per-reference scaled maps."""
    maps = per_reference_maps(partitions)
    weights = similarity_weights(pairwise_jaccard(partitions))
    scores = np.zeros(partitions[0].node_count)
    for w, m in zip(weights, maps):
        scores += w * m.scores
    return WeightedAverageMap(scores=scores, weights=weights, per_reference_maps=maps)


def argmax_reference_map(partitions: list[Partition]) -> ArgmaxReferenceMap:
    """Per node, the reference whose scaled map scores it highest.

    Indices are 1-based; ties go to the earliest realization.
    """
    maps = per_reference_maps(partitions)
    stacked = np.stack([m.scores for m in maps])  # (n, v)
    best = np.argmax(stacked, axis=0)  # first occurrence = earliest
    return ArgmaxReferenceMap(
        best_reference=best + 1,
        best_score=stacked[best, np.arange(stacked.shape[1])],
    )


def signed_community_map(
    partitions: list[Partition], reference_index: int, community_id: int
) -> SignedCommunityMap:
    """Signed consistency of one reference community across the ensemble.

    For each compared partition and each of its communities A_p overlapping
    R_q: nodes in A_p & R_q gain X[p, q], nodes in A_p outside R_q lose
    X[p, q]. Positive scores occur only inside R_q, negative only outside.
    """
    _check_ensemble(partitions)
    if not (0 <= reference_index < len(partitions)):
        raise ValueError(f"reference index {reference_index} out of range")
    reference = partitions[reference_index]
    if not (0 <= community_id < reference.community_count):
        raise ValueError(
            f"community id {community_id} not in reference "
            f"(m = {reference.community_count})"
        )
    mem_r = np.asarray(reference.membership)
    in_q = mem_r == community_id
    scores = np.zeros(reference.node_count)
    for i, compared in enumerate(partitions):
        if i == reference_index:
            continue
        x = _overlap_values(compared, reference)
        mem_c = np.asarray(compared.membership)
        x_q = x[mem_c, community_id]  # each node's own-community column value
        scores += np.where(in_q, x_q, -x_q) * (x_q > 0)
    return SignedCommunityMap(
        scores=scores, reference_index=reference_index, community_id=community_id
    )

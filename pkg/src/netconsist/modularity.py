"""Modularity scoring and a pluggable nondeterministic community detector.

Counting convention: ``intra_edge_ends`` counts intra-community edge-ends,
so each intra-community edge contributes 2 to its community. With M the
degree sum (twice the edge count), the single-community partition then
scores exactly Q = 0, the standard normalization.

Internally, modularity comparisons use the exact integer numerator
Q * M^2 = sum_i (e_ii * M - a_i^2), so merge decisions and tie detection
never depend on float rounding.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .graph import Graph, Partition

__all__ = [
    "CommunityStats",
    "ModularityBreakdown",
    "DetectorConfig",
    "modularity",
    "detect_communities",
    "best_partition",
]

Detector = Callable[[Graph, int], Partition]


@dataclass(frozen=True)
class CommunityStats:
    intra_edge_ends: int
    degree_total: int


@dataclass(frozen=True)
class ModularityBreakdown:
    per_community: tuple[CommunityStats, ...]
    total_q: float

    def q_numerator(self, degree_sum: int) -> int:
        """Exact integer Q * M^2."""
        return sum(
            c.intra_edge_ends * degree_sum - c.degree_total**2
            for c in self.per_community
        )


@dataclass(frozen=True)
class DetectorConfig:
    runs: int = 10
    rng_seed: int = 0
    selection_rule: str = "highest_q"  # or "max_summed_jaccard"

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if self.selection_rule not in ("highest_q", "max_summed_jaccard"):
            raise ValueError(f"unknown selection rule {self.selection_rule!r}")


def modularity(graph: Graph, partition: Partition) -> ModularityBreakdown:
    """Per-community modularity contributions and their total."""
    if partition.node_count != graph.node_count:
        raise ValueError("partition does not cover the graph's node set")
    big_m = graph.degree_sum
    if big_m == 0:
        raise ValueError("modularity is undefined on an edgeless graph")
    m = partition.community_count
    intra = [0] * m
    deg_total = [0] * m
    mem = partition.membership
    for u, v in graph.edges:
        deg_total[mem[u]] += 1
        deg_total[mem[v]] += 1
        if mem[u] == mem[v]:
            intra[mem[u]] += 2
    stats = tuple(
        CommunityStats(intra_edge_ends=e, degree_total=a)
        for e, a in zip(intra, deg_total)
    )
    total = sum(e / big_m - (a / big_m) ** 2 for e, a in zip(intra, deg_total))
    return ModularityBreakdown(per_community=stats, total_q=total)


def _canonical(labels: list[int]) -> Partition:
    return Partition.from_labels(labels)


def detect_communities(graph: Graph, rng_seed: int) -> Partition:
    """Seeded greedy agglomerative modularity maximizer.

    Starts from singletons, repeatedly merges the community pair with the
    largest exact modularity gain (random tie-break), then runs local
    node-move refinement passes until no single move improves modularity.
    The same seed always yields the same partition.
    """
    if graph.edge_count == 0:
        raise ValueError("cannot detect communities on an edgeless graph")
    rng = random.Random(rng_seed)
    big_m = graph.degree_sum
    n = graph.node_count
    degrees = graph.degrees()

    comm = list(range(n))
    comm_degree = {i: int(degrees[i]) for i in range(n)}
    # between[c][d] = number of edges between communities c and d (c != d)
    between: dict[int, dict[int, int]] = {i: {} for i in range(n)}
    for u, v in graph.edges:
        between[u][v] = between[u].get(v, 0) + 1
        between[v][u] = between[v].get(u, 0) + 1

    # Agglomeration: gain of merging c,d is proportional to
    # e_cd * M - a_c * a_d (exact integers).
    while True:
        best_gain = 0
        best_pairs: list[tuple[int, int]] = []
        for c, nbrs in between.items():
            for d, e_cd in nbrs.items():
                if d <= c:
                    continue
                gain = e_cd * big_m - comm_degree[c] * comm_degree[d]
                if gain > best_gain:
                    best_gain = gain
                    best_pairs = [(c, d)]
                elif gain == best_gain and gain > 0:
                    best_pairs.append((c, d))
        if not best_pairs:
            break
        c, d = best_pairs[rng.randrange(len(best_pairs))] if len(
            best_pairs
        ) > 1 else best_pairs[0]
        # Merge d into c.
        comm_degree[c] += comm_degree.pop(d)
        for e, cnt in between.pop(d).items():
            if e == c:
                continue
            between[e].pop(d)
            between[c][e] = between[c].get(e, 0) + cnt
            between[e][c] = between[e].get(c, 0) + cnt
        between[c].pop(d, None)
        for i in range(n):
            if comm[i] == d:
                comm[i] = c

    _refine(graph, comm, rng)
    return _canonical(comm)


def _refine(graph: Graph, comm: list[int], rng: random.Random) -> None:
    """Local node-move passes; mutates ``comm`` in place.

    Moving node v from community c to d changes Q * M^2 by
    2 * [ (e_vd - e_vc) * M - k_v * (a_d - a_c + k_v) ]
    where e_vx counts v's neighbors in community x (v excluded).
    """
    big_m = graph.degree_sum
    n = graph.node_count
    degrees = graph.degrees()
    adj = graph.adjacency()
    comm_degree: dict[int, int] = {}
    for v in range(n):
        comm_degree[comm[v]] = comm_degree.get(comm[v], 0) + int(degrees[v])

    order = list(range(n))
    for _ in range(10 * n):
        rng.shuffle(order)
        moved = False
        for v in order:
            c = comm[v]
            k_v = int(degrees[v])
            links: dict[int, int] = {}
            for u in adj[v]:
                links[comm[u]] = links.get(comm[u], 0) + 1
            e_vc = links.get(c, 0)
            best_gain = 0
            best_d = c
            for d, e_vd in links.items():
                if d == c:
                    continue
                gain = (e_vd - e_vc) * big_m - k_v * (
                    comm_degree[d] - comm_degree[c] + k_v
                )
                if gain > best_gain:
                    best_gain, best_d = gain, d
            if best_d != c:
                comm_degree[c] -= k_v
                comm_degree[best_d] += k_v
                comm[v] = best_d
                moved = True
        if not moved:
            break


def best_partition(
    graph: Graph, config: DetectorConfig, detector: Detector = detect_communities
) -> Partition:
    """Run the detector ``config.runs`` times and pick the best run.

    Run j uses seed ``config.rng_seed + j``. Under ``highest_q`` the run with
    the largest exact modularity wins; under ``max_summed_jaccard`` the run
    with the largest column sum in the pairwise Jaccard matrix over the runs.
    Ties go to the lowest run index.
    """
    runs = [detector(graph, config.rng_seed + j) for j in range(config.runs)]
    if len(runs) == 1:
        return runs[0]
    if config.selection_rule == "highest_q":
        big_m = graph.degree_sum
        scores = [modularity(graph, p).q_numerator(big_m) for p in runs]
    else:
        from .similarity import pairwise_jaccard

        scores = list(pairwise_jaccard(runs).sum(axis=0))
    best = 0
    for j in range(1, len(runs)):
        if scores[j] > scores[best]:
            best = j
    return runs[best]

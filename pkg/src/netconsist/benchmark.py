"""Planted-partition benchmark graphs with power-law degree and
community-size distributions.

This follows the contract of the standard planted-partition construction:
degrees drawn from a truncated power law rescaled to the requested mean,
community sizes from a second truncated power law summing exactly to N,
nodes placed so that each one's intra-community degree fits its community,
and edges wired by stub matching with repair swaps so the graph stays
simple while degrees are preserved and the mixing fraction is approximated.
Agreement is distributional, not sample-level: the contract is the
parameter invariants, not any particular realization.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .graph import Graph, Partition

__all__ = [
    "BenchmarkParams",
    "PlantedBenchmark",
    "GenerationError",
    "generate_benchmark",
    "measure_mixing",
]


class GenerationError(ValueError):
    """Raised when parameters cannot be satisfied after bounded retries."""


@dataclass(frozen=True)
class BenchmarkParams:
    node_count: int
    mixing: float
    avg_degree: float
    max_degree: int
    min_community: int
    max_community: int
    degree_exponent: float = 2.0
    community_exponent: float = 1.0
    rng_seed: int = 0

    def __post_init__(self):
        n = self.node_count
        if not (0 < self.min_community <= self.max_community <= n):
            raise ValueError("community size bounds must satisfy 0 < s_min <= s_max <= N")
        if not (0 < self.avg_degree <= self.max_degree < n):
            raise ValueError("degrees must satisfy 0 < k_ave <= k_max < N")
        if not (0.0 <= self.mixing <= 1.0):
            raise ValueError("mixing must be in [0, 1]")
        if self.degree_exponent <= 0 or self.community_exponent <= 0:
            raise ValueError("power-law exponents must be positive")
        if self.min_community < self.avg_degree:
            raise ValueError(
                "s_min must be >= k_ave so intra-degree targets are satisfiable"
            )


@dataclass(frozen=True)
class PlantedBenchmark:
    graph: Graph
    planted: Partition
    achieved_mixing: float


def measure_mixing(graph: Graph, partition: Partition) -> float:
    """Fraction of edge-ends crossing community boundaries."""
    if graph.edge_count == 0:
        raise ValueError("mixing is undefined on an edgeless graph")
    if partition.node_count != graph.node_count:
        raise ValueError("partition does not cover the graph's node set")
    mem = partition.membership
    inter = sum(1 for u, v in graph.edges if mem[u] != mem[v])
    return 2 * inter / graph.degree_sum


def _powerlaw_mean(lo: float, hi: float, exponent: float) -> float:
    """Mean of the continuous power law p(x) ~ x^-exponent on [lo, hi]."""
    g = exponent
    if abs(g - 1.0) < 1e-12:
        z = np.log(hi / lo)
    else:
        z = (hi ** (1 - g) - lo ** (1 - g)) / (1 - g)
    if abs(g - 2.0) < 1e-12:
        m1 = np.log(hi / lo)
    else:
        m1 = (hi ** (2 - g) - lo ** (2 - g)) / (2 - g)
    return m1 / z


def _powerlaw_sample(
    rng: np.random.Generator, size: int, lo: float, hi: float, exponent: float
) -> np.ndarray:
    """Inverse-transform samples of the continuous truncated power law."""
    u = rng.random(size)
    g = exponent
    if abs(g - 1.0) < 1e-12:
        return lo * (hi / lo) ** u
    a = lo ** (1 - g)
    b = hi ** (1 - g)
    return (a + u * (b - a)) ** (1.0 / (1 - g))


def _sample_degrees(rng: np.random.Generator, p: BenchmarkParams) -> np.ndarray:
    """Degrees with mean ~ k_ave; the lower cutoff is solved so the
    truncated distribution hits the requested mean."""
    hi = float(p.max_degree)
    target = float(p.avg_degree)
    lo_min, lo_max = 1.0, hi - 1e-9
    if _powerlaw_mean(lo_min, hi, p.degree_exponent) >= target:
        lo = lo_min
    else:
        lo = brentq(
            lambda a: _powerlaw_mean(a, hi, p.degree_exponent) - target,
            lo_min,
            lo_max,
        )
    raw = _powerlaw_sample(rng, p.node_count, lo, hi, p.degree_exponent)
    degrees = np.clip(np.rint(raw).astype(np.int64), 1, p.max_degree)
    if degrees.sum() % 2 == 1:
        i = int(rng.integers(p.node_count))
        degrees[i] += 1 if degrees[i] < p.max_degree else -1
    return degrees


def _sample_sizes(rng: np.random.Generator, p: BenchmarkParams) -> list[int]:
    """Community sizes in [s_min, s_max] summing exactly to N."""
    n = p.node_count
    for _ in range(1000):
        sizes: list[int] = []
        while sum(sizes) < n:
            raw = _powerlaw_sample(
                rng, 1, p.min_community, p.max_community, p.community_exponent
            )[0]
            sizes.append(int(np.clip(round(raw), p.min_community, p.max_community)))
        excess = sum(sizes) - n
        shrinkable = [i for i, s in enumerate(sizes) if s > p.min_community]
        while excess > 0 and shrinkable:
            i = shrinkable[int(rng.integers(len(shrinkable)))]
            sizes[i] -= 1
            excess -= 1
            if sizes[i] == p.min_community:
                shrinkable.remove(i)
        if excess == 0:
            return sizes
    raise GenerationError("could not fit community sizes to the node count")


def _intra_degrees(degrees: np.ndarray, mixing: float) -> np.ndarray:
    # Round (1 - mu) * k to the nearest integer, ties up.
    return np.floor((1.0 - mixing) * degrees + 0.5).astype(np.int64)


def _assign_communities(
    rng: np.random.Generator,
    sizes: list[int],
    d_int: np.ndarray,
) -> list[int] | None:
    """Place each node so its intra-degree fits (d_int <= size - 1).

    Nodes pick random feasible communities; a full community evicts a random
    member. Returns None if the bounded loop fails to settle.
    """
    n = len(d_int)
    m = len(sizes)
    members: list[set[int]] = [set() for _ in range(m)]
    comm = [-1] * n
    feasible = [
        [c for c in range(m) if sizes[c] - 1 >= d_int[v]] for v in range(n)
    ]
    if any(not f for f in feasible):
        return None
    pending = list(rng.permutation(n))
    budget = 100 * n
    while pending and budget > 0:
        budget -= 1
        v = pending.pop()
        c = feasible[v][int(rng.integers(len(feasible[v])))]
        if len(members[c]) >= sizes[c]:
            evicted = list(members[c])[int(rng.integers(len(members[c])))]
            members[c].discard(evicted)
            comm[evicted] = -1
            pending.append(evicted)
        members[c].add(v)
        comm[v] = c
    if pending:
        return None
    return comm


def _match_stubs(
    rng: np.random.Generator,
    stubs: list[int],
    valid,
    existing: set[tuple[int, int]],
    max_repair: int = 200,
) -> list[tuple[int, int]]:
    """Pair stubs into simple edges; conflicting pairs are repaired by
    swapping with accepted pairs, leftovers dropped."""
    stubs = list(stubs)
    rng.shuffle(stubs)
    accepted: list[tuple[int, int]] = []
    seen = set(existing)
    bad: list[tuple[int, int]] = []

    def ok(u: int, v: int) -> bool:
        if u == v or not valid(u, v):
            return False
        return (min(u, v), max(u, v)) not in seen

    for i in range(0, len(stubs) - 1, 2):
        u, v = stubs[i], stubs[i + 1]
        if ok(u, v):
            accepted.append((u, v))
            seen.add((min(u, v), max(u, v)))
        else:
            bad.append((u, v))
    for u, v in bad:
        repaired = False
        for _ in range(max_repair):
            if not accepted:
                break
            j = int(rng.integers(len(accepted)))
            x, y = accepted[j]
            # Try (u, x) + (v, y), then (u, y) + (v, x).
            for a, b, c, d in ((u, x, v, y), (u, y, v, x)):
                seen.discard((min(x, y), max(x, y)))
                if ok(a, b) and ok(c, d) and {a, b} != {c, d}:
                    accepted[j] = (a, b)
                    seen.add((min(a, b), max(a, b)))
                    accepted.append((c, d))
                    seen.add((min(c, d), max(c, d)))
                    repaired = True
                    break
                seen.add((min(x, y), max(x, y)))
            if repaired:
                break
        # Unrepairable stubs are dropped (small degree loss).
    return accepted


def generate_benchmark(params: BenchmarkParams) -> PlantedBenchmark:
    """Generate one seeded benchmark graph with its planted partition."""
    rng = np.random.default_rng(params.rng_seed)
    last_error = "assignment did not settle"
    for _ in range(40):
        degrees = _sample_degrees(rng, params)
        try:
            sizes = _sample_sizes(rng, params)
        except GenerationError as exc:
            last_error = str(exc)
            continue
        d_int = np.minimum(_intra_degrees(degrees, params.mixing), degrees)
        comm = _assign_communities(rng, sizes, d_int)
        if comm is None:
            continue

        # Per-community intra-stub parity: a leftover odd stub becomes an
        # inter stub (or is dropped at mu = 0, keeping mixing exactly 0).
        members: dict[int, list[int]] = {}
        for v, c in enumerate(comm):
            members.setdefault(c, []).append(v)
        d_int = d_int.copy()
        degrees = degrees.copy()
        for c, nodes in members.items():
            if sum(int(d_int[v]) for v in nodes) % 2 == 1:
                cand = [v for v in nodes if d_int[v] > 0]
                v = cand[int(rng.integers(len(cand)))]
                d_int[v] -= 1
                if params.mixing == 0.0:
                    degrees[v] -= 1

        edges: set[tuple[int, int]] = set()
        for c, nodes in members.items():
            stubs = [v for v in nodes for _ in range(int(d_int[v]))]
            pairs = _match_stubs(rng, stubs, lambda u, v: True, edges)
            edges.update((min(u, v), max(u, v)) for u, v in pairs)

        inter_counts = degrees - d_int
        if inter_counts.sum() % 2 == 1:
            v = int(np.argmax(inter_counts))
            inter_counts[v] -= 1
        stubs = [v for v in range(params.node_count) for _ in range(int(inter_counts[v]))]
        pairs = _match_stubs(rng, stubs, lambda u, v: comm[u] != comm[v], edges)
        edges.update((min(u, v), max(u, v)) for u, v in pairs)

        if not edges:
            last_error = "no edges generated"
            continue
        graph = Graph(node_count=params.node_count, edges=frozenset(edges))
        planted = Partition.from_labels(comm)
        return PlantedBenchmark(
            graph=graph,
            planted=planted,
            achieved_mixing=measure_mixing(graph, planted),
        )
    raise GenerationError(f"benchmark generation failed: {last_error}")

import numpy as np
import pytest

from netconsist.benchmark import (
    BenchmarkParams,
    GenerationError,
    generate_benchmark,
    measure_mixing,
)
from netconsist.graph import Graph, Partition

TRIANGLES = Graph.from_edges(
    6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]
)

SMALL = dict(
    node_count=120,
    mixing=0.2,
    avg_degree=8,
    max_degree=25,
    min_community=10,
    max_community=40,
)


class TestParams:
    def test_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            BenchmarkParams(100, 0.3, 10, 50, min_community=60, max_community=40)
        with pytest.raises(ValueError):
            BenchmarkParams(100, 1.5, 10, 50, min_community=15, max_community=40)
        with pytest.raises(ValueError):
            BenchmarkParams(100, 0.3, 10, 200, min_community=15, max_community=40)

    def test_rejects_unsatisfiable_intra_degree(self):
        with pytest.raises(ValueError, match="s_min"):
            BenchmarkParams(100, 0.3, 20, 50, min_community=10, max_community=40)


class TestMeasureMixing:
    def test_single_community_zero(self):
        assert measure_mixing(TRIANGLES, Partition((0,) * 6)) == 0.0

    def test_all_singletons_one(self):
        assert measure_mixing(TRIANGLES, Partition(tuple(range(6)))) == 1.0

    def test_triangle_partition(self):
        assert measure_mixing(TRIANGLES, Partition((0, 0, 0, 1, 1, 1))) == (
            pytest.approx(2 / 14, abs=1e-15)
        )

    def test_edgeless_errors(self):
        with pytest.raises(ValueError):
            measure_mixing(Graph(node_count=2, edges=frozenset()), Partition((0, 0)))


class TestGenerate:
    def test_structure_invariants(self):
        bench = generate_benchmark(BenchmarkParams(rng_seed=11, **SMALL))
        g, p = bench.graph, bench.planted
        sizes = p.sizes()
        assert sizes.sum() == 120
        assert sizes.min() >= 10 and sizes.max() <= 40
        degrees = g.degrees()
        assert degrees.max() <= 25
        assert abs(degrees.mean() - 8) / 8 <= 0.15
        assert bench.achieved_mixing == measure_mixing(g, p)
        # simple graph by construction (Graph rejects loops/dups)
        assert all(u < v for u, v in g.edges)

    def test_mixing_zero(self):
        bench = generate_benchmark(
            BenchmarkParams(rng_seed=3, **{**SMALL, "mixing": 0.0})
        )
        assert bench.achieved_mixing == 0.0
        mem = bench.planted.membership
        assert all(mem[u] == mem[v] for u, v in bench.graph.edges)

    def test_mixing_approximation(self):
        for seed in range(5):
            bench = generate_benchmark(BenchmarkParams(rng_seed=seed, **SMALL))
            assert abs(bench.achieved_mixing - 0.2) <= 0.05

    def test_deterministic(self):
        a = generate_benchmark(BenchmarkParams(rng_seed=9, **SMALL))
        b = generate_benchmark(BenchmarkParams(rng_seed=9, **SMALL))
        assert a.graph == b.graph
        assert a.planted == b.planted
        assert a.achieved_mixing == b.achieved_mixing

    def test_failure_names_constraint(self):
        # one community of exactly N nodes but degrees forced beyond N-1
        # cannot happen; instead force impossible sizes: s_min > N
        with pytest.raises(ValueError):
            BenchmarkParams(10, 0.3, 5, 8, min_community=20, max_community=30)

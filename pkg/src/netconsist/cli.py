"""Command-line interface.

Subcommands: generate, detect, similarity, consistency, weighted-map,
argmax-map, signed-map, ingest-seasons, render, pipeline. Exit codes:
0 on success, 1 on validation error, 2 on IO error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .benchmark import BenchmarkParams, generate_benchmark
from .consistency import binary_exclusivity, binary_inclusivity, scaled_inclusivity
from .ensemble import argmax_reference_map, signed_community_map, weighted_average_map
from .geoviz import (
    load_boundary,
    load_coordinates,
    render_scalar_map,
    save_png,
    voronoi_raster,
)
from .graph import (
    NodeUniverse,
    load_edge_list,
    load_node_universe,
    load_partition,
    save_edge_list,
    save_partition,
)
from .io import read_scores, write_scores, write_sidecar, write_similarity_report
from .modularity import DetectorConfig, best_partition
from .pipeline import PipelineConfig, run_pipeline
from .seasons import build_season_network, load_schedules
from .similarity import pairwise_jaccard, similarity_weights


def _load_ensemble(partition_paths, universe_path):
    universe = load_node_universe(universe_path)
    return universe, [load_partition(p, universe) for p in partition_paths]


def _cmd_generate(args) -> int:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    universe = NodeUniverse(tuple(f"n{i:04d}" for i in range(args.nodes)))
    (out / "universe.txt").write_text(
        "".join(f"{lab}\n" for lab in universe.labels), encoding="utf-8"
    )
    for i in range(args.count):
        params = BenchmarkParams(
            node_count=args.nodes,
            mixing=args.mixing,
            avg_degree=args.avg_degree,
            max_degree=args.max_degree,
            min_community=args.min_community,
            max_community=args.max_community,
            degree_exponent=args.degree_exponent,
            community_exponent=args.community_exponent,
            rng_seed=args.seed + i,
        )
        bench = generate_benchmark(params)
        save_edge_list(out / f"network_{i + 1:03d}.edges", bench.graph, universe)
        save_partition(out / f"network_{i + 1:03d}.planted", bench.planted, universe)
        print(
            f"network_{i + 1:03d}: {bench.graph.edge_count} edges, "
            f"{bench.planted.community_count} communities, "
            f"mixing {bench.achieved_mixing:.4f}"
        )
    return 0


def _cmd_detect(args) -> int:
    config = DetectorConfig(
        runs=args.runs,
        rng_seed=args.seed,
        selection_rule={"q": "highest_q", "jaccard": "max_summed_jaccard"}[args.select],
    )
    for path in args.graphs:
        graph, universe = load_edge_list(path)
        partition = best_partition(graph, config)
        out = Path(args.out_dir or ".") / (Path(path).stem + ".partition")
        out.parent.mkdir(parents=True, exist_ok=True)
        save_partition(out, partition, universe)
        print(f"{out}: {partition.community_count} communities")
    return 0


def _cmd_similarity(args) -> int:
    universe, partitions = _load_ensemble(args.partitions, args.universe)
    j = pairwise_jaccard(partitions)
    weights = similarity_weights(j)
    write_similarity_report(args.out, j, weights)
    print(f"wrote {args.out}")
    return 0


def _cmd_consistency(args) -> int:
    universe, partitions = _load_ensemble(args.partitions, args.universe)
    ref = args.reference
    if not (0 <= ref < len(partitions)):
        raise ValueError(f"--reference {ref} out of range for {len(partitions)} files")
    others = partitions[:ref] + partitions[ref + 1 :]
    reference = partitions[ref]
    if args.scheme == "scaled":
        cmap = scaled_inclusivity(others, reference, reference_index=ref)
    elif args.scheme == "inclusive":
        cmap = binary_inclusivity(
            others, reference, threshold=args.threshold, reference_index=ref
        )
    else:
        cmap = binary_exclusivity(others, reference, reference_index=ref)
    write_scores(args.out, universe, cmap.scores)
    print(f"wrote {args.out}")
    return 0


def _cmd_weighted_map(args) -> int:
    universe, partitions = _load_ensemble(args.partitions, args.universe)
    wmap = weighted_average_map(partitions)
    write_scores(args.out, universe, wmap.scores)
    write_sidecar(
        str(args.out) + ".json",
        scheme="scaled",
        n=len(partitions),
        weights=wmap.weights,
    )
    print(f"wrote {args.out}")
    return 0


def _cmd_argmax_map(args) -> int:
    universe, partitions = _load_ensemble(args.partitions, args.universe)
    amap = argmax_reference_map(partitions)
    write_scores(args.out, universe, amap.best_reference)
    write_sidecar(
        str(args.out) + ".json",
        scheme="scaled",
        n=len(partitions),
        indexing="1-based",
    )
    print(f"wrote {args.out}")
    return 0


def _cmd_signed_map(args) -> int:
    universe, partitions = _load_ensemble(args.partitions, args.universe)
    smap = signed_community_map(partitions, args.reference, args.community)
    write_scores(args.out, universe, smap.scores)
    write_sidecar(
        str(args.out) + ".json",
        scheme="signed",
        n=len(partitions),
        reference=args.reference,
        community=args.community,
    )
    print(f"wrote {args.out}")
    return 0


def _cmd_ingest_seasons(args) -> int:
    years = None
    if args.years:
        lo, _, hi = args.years.partition(":")
        years = (int(lo), int(hi))
    schedules = load_schedules(args.games, args.membership, years)
    universe = load_node_universe(args.universe)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for schedule in schedules:
        graph, truth = build_season_network(
            schedule, universe, allow_unknown=args.allow_unknown
        )
        save_edge_list(out / f"season_{schedule.year}.edges", graph, universe)
        save_partition(out / f"season_{schedule.year}.truth", truth.partition, universe)
        print(
            f"season {schedule.year}: {graph.edge_count} edges, "
            f"{truth.partition.community_count} ground-truth communities"
        )
    return 0


def _cmd_render(args) -> int:
    universe = load_node_universe(args.universe)
    layout = load_coordinates(args.coordinates, universe)
    if args.boundary:
        layout = replace(layout, boundary=load_boundary(args.boundary))
    width, _, height = args.raster.partition("x")
    raster = voronoi_raster(layout, int(width), int(height))
    values = read_scores(args.values, universe)
    out = Path(args.out)
    if out.suffix.lower() == ".png":
        save_png(raster, values, palette=args.palette, out_path=out)
    else:
        render_scalar_map(raster, values, palette=args.palette, out_path=out)
    print(f"wrote {out}")
    return 0


def _cmd_pipeline(args) -> int:
    overrides = {}
    for item in args.set or []:
        key, _, value = item.partition("=")
        if not value:
            raise ValueError(f"--set expects key=value, got {item!r}")
        overrides[key.strip()] = value.strip()
    config = PipelineConfig.from_file(args.config, overrides)
    manifest = run_pipeline(config)
    print(f"wrote {len(manifest['artifacts'])} artifacts to {config.get('output.dir')}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netconsist",
        description="Node-level consistency of community structure across networks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate planted-partition benchmarks")
    p.add_argument("--nodes", type=int, default=256)
    p.add_argument("--mixing", type=float, default=0.35)
    p.add_argument("--avg-degree", type=float, default=10.0)
    p.add_argument("--max-degree", type=int, default=50)
    p.add_argument("--min-community", type=int, default=15)
    p.add_argument("--max-community", type=int, default=51)
    p.add_argument("--degree-exponent", type=float, default=2.0)
    p.add_argument("--community-exponent", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=30)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("detect", help="detect the best partition per graph")
    p.add_argument("graphs", nargs="+")
    p.add_argument("--runs", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--select", choices=("q", "jaccard"), default="q")
    p.add_argument("--out-dir")
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("similarity", help="pairwise Jaccard matrix and weights")
    p.add_argument("partitions", nargs="+")
    p.add_argument("--universe", required=True)
    p.add_argument("--out", default="similarity.txt")
    p.set_defaults(func=_cmd_similarity)

    p = sub.add_parser("consistency", help="per-node consistency scores")
    p.add_argument("partitions", nargs="+")
    p.add_argument("--universe", required=True)
    p.add_argument("--reference", type=int, required=True)
    p.add_argument(
        "--scheme", choices=("exclusive", "inclusive", "scaled"), default="scaled"
    )
    p.add_argument("--threshold", type=float, default=0.0)
    p.add_argument("--out", default="consistency.txt")
    p.set_defaults(func=_cmd_consistency)

    p = sub.add_parser("weighted-map", help="Jaccard-weighted average map")
    p.add_argument("partitions", nargs="+")
    p.add_argument("--universe", required=True)
    p.add_argument("--out", default="weighted_map.txt")
    p.set_defaults(func=_cmd_weighted_map)

    p = sub.add_parser("argmax-map", help="best reference per node (1-based)")
    p.add_argument("partitions", nargs="+")
    p.add_argument("--universe", required=True)
    p.add_argument("--out", default="argmax_map.txt")
    p.set_defaults(func=_cmd_argmax_map)

    p = sub.add_parser("signed-map", help="signed per-community map")
    p.add_argument("partitions", nargs="+")
    p.add_argument("--universe", required=True)
    p.add_argument("--reference", type=int, required=True)
    p.add_argument("--community", type=int, required=True)
    p.add_argument("--out", default="signed_map.txt")
    p.set_defaults(func=_cmd_signed_map)

    p = sub.add_parser("ingest-seasons", help="build per-season networks")
    p.add_argument("--games", required=True)
    p.add_argument("--membership", required=True)
    p.add_argument("--universe", required=True)
    p.add_argument("--years")
    p.add_argument("--allow-unknown", action="store_true")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=_cmd_ingest_seasons)

    p = sub.add_parser("render", help="render a per-node scalar map")
    p.add_argument("--universe", required=True)
    p.add_argument("--coordinates", required=True)
    p.add_argument("--boundary")
    p.add_argument("--values", required=True)
    p.add_argument("--raster", default="1200x600")
    p.add_argument(
        "--palette",
        choices=("sequential", "diverging", "categorical"),
        default="sequential",
    )
    p.add_argument("--out", default="map.svg")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("pipeline", help="run a configured end-to-end pipeline")
    p.add_argument("config")
    p.add_argument("--set", action="append", metavar="KEY=VALUE")
    p.set_defaults(func=_cmd_pipeline)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

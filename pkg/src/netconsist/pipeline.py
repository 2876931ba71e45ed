"""End-to-end orchestration: inputs -> detection -> consistency -> maps.

A pipeline is driven by one key-value config file so a stored config plus
its inputs reproduces byte-identical outputs. All randomness flows from the
single top-level ``seed``: benchmark i uses seed + 1000 + i, and the
detector for network i derives run seeds from seed + 10000 * (i + 1).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .benchmark import BenchmarkParams, generate_benchmark
from .consistency import binary_exclusivity, binary_inclusivity, scaled_inclusivity
from .ensemble import argmax_reference_map, signed_community_map, weighted_average_map
from .geoviz import load_boundary, load_coordinates, render_scalar_map, voronoi_raster
from .graph import (
    Graph,
    NodeUniverse,
    Partition,
    load_edge_list,
    load_node_universe,
    save_edge_list,
    save_partition,
)
from .io import write_scores, write_sidecar, write_similarity_report
from .modularity import DetectorConfig, best_partition
from .seasons import build_season_network, load_schedules
from .similarity import pairwise_jaccard, similarity_weights

__all__ = ["PipelineConfig", "run_pipeline"]


@dataclass
class PipelineConfig:
    values: dict[str, str] = field(default_factory=dict)

    @staticmethod
    def from_file(path: str | Path, overrides: dict[str, str] | None = None):
        values: dict[str, str] = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ValueError(f"{path}:{lineno}: expected key = value")
                key, _, value = line.partition("=")
                values[key.strip()] = value.strip()
        if overrides:
            values.update(overrides)
        return PipelineConfig(values)

    def get(self, key: str, default: str | None = None) -> str:
        if key in self.values:
            return self.values[key]
        if default is None:
            raise ValueError(f"pipeline config is missing required key {key!r}")
        return default

    def get_int(self, key: str, default: int | None = None) -> int:
        raw = self.get(key, None if default is None else str(default))
        return int(raw)

    def get_float(self, key: str, default: float | None = None) -> float:
        raw = self.get(key, None if default is None else str(default))
        return float(raw)


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _load_inputs(config: PipelineConfig, out_dir: Path, artifacts: list[Path]):
    """Returns (universe, graphs, planted-or-None list)."""
    mode = config.get("input.mode")
    seed = config.get_int("seed", 0)
    if mode == "generate":
        count = config.get_int("generate.count")
        n = config.get_int("generate.nodes")
        universe = NodeUniverse(tuple(f"n{i:04d}" for i in range(n)))
        graphs, planted = [], []
        for i in range(count):
            params = BenchmarkParams(
                node_count=n,
                mixing=config.get_float("generate.mixing"),
                avg_degree=config.get_float("generate.avg_degree"),
                max_degree=config.get_int("generate.max_degree"),
                min_community=config.get_int("generate.min_community"),
                max_community=config.get_int("generate.max_community"),
                degree_exponent=config.get_float("generate.degree_exponent", 2.0),
                community_exponent=config.get_float("generate.community_exponent", 1.0),
                rng_seed=seed + 1000 + i,
            )
            bench = generate_benchmark(params)
            graphs.append(bench.graph)
            planted.append(bench.planted)
            edge_path = out_dir / f"network_{i + 1:03d}.edges"
            save_edge_list(edge_path, bench.graph, universe)
            artifacts.append(edge_path)
            part_path = out_dir / f"network_{i + 1:03d}.planted"
            save_partition(part_path, bench.planted, universe)
            artifacts.append(part_path)
        return universe, graphs, planted
    if mode == "edges":
        files = [f.strip() for f in config.get("edges.files").split(",") if f.strip()]
        if "edges.universe" in config.values:
            universe = load_node_universe(config.get("edges.universe"))
        else:
            _, universe = load_edge_list(files[0])
        graphs = [load_edge_list(f, universe)[0] for f in files]
        return universe, graphs, [None] * len(graphs)
    if mode == "seasons":
        years = None
        if "seasons.years" in config.values:
            lo, _, hi = config.get("seasons.years").partition(":")
            years = (int(lo), int(hi))
        schedules = load_schedules(
            config.get("seasons.games"), config.get("seasons.membership"), years
        )
        universe = load_node_universe(config.get("seasons.universe"))
        graphs, truths = [], []
        for s in schedules:
            graph, truth = build_season_network(s, universe)
            graphs.append(graph)
            truths.append(truth.partition)
        return universe, graphs, truths
    raise ValueError(f"unknown input.mode {mode!r}")


def _partitions(
    config: PipelineConfig,
    graphs: list[Graph],
    planted: list[Partition | None],
) -> list[Partition]:
    source = config.get("partitions.source", "detected")
    if source in ("planted", "truth"):
        if any(p is None for p in planted):
            raise ValueError(f"partitions.source={source} needs generated or season inputs")
        return [p for p in planted if p is not None]
    if source != "detected":
        raise ValueError(f"unknown partitions.source {source!r}")
    seed = config.get_int("seed", 0)
    select = {"q": "highest_q", "jaccard": "max_summed_jaccard"}[
        config.get("detect.select", "q")
    ]
    runs = config.get_int("detect.runs", 10)
    out = []
    for i, graph in enumerate(graphs):
        cfg = DetectorConfig(
            runs=runs, rng_seed=seed + 10000 * (i + 1), selection_rule=select
        )
        out.append(best_partition(graph, cfg))
    return out


def run_pipeline(config: PipelineConfig) -> dict:
    """Run every configured stage; returns the artifact manifest.

    Any stage error aborts with the failing stage named and removes the
    partial outputs already written.
    """
    out_dir = Path(config.get("output.dir"))
    out_dir.mkdir(parents=True, exist_ok=True)
    artifacts: list[Path] = []
    stage = "inputs"
    try:
        universe, graphs, planted = _load_inputs(config, out_dir, artifacts)
        if len(graphs) < 2:
            raise ValueError("ensemble requires n >= 2 networks")

        stage = "detect"
        partitions = _partitions(config, graphs, planted)
        for i, p in enumerate(partitions):
            path = out_dir / f"partition_{i + 1:03d}.txt"
            save_partition(path, p, universe)
            artifacts.append(path)

        stage = "similarity"
        j = pairwise_jaccard(partitions)
        weights = similarity_weights(j)
        sim_path = out_dir / "similarity.txt"
        write_similarity_report(sim_path, j, weights)
        artifacts.append(sim_path)

        stage = "consistency"
        ref_policy = config.get("reference.policy", "all")
        scheme = config.get("consistency.scheme", "scaled")
        if ref_policy == "fixed":
            ref = config.get_int("reference.index")
            others = partitions[:ref] + partitions[ref + 1 :]
            reference = partitions[ref]
            if scheme == "scaled":
                cmap = scaled_inclusivity(others, reference, reference_index=ref)
            elif scheme == "inclusive":
                cmap = binary_inclusivity(
                    others,
                    reference,
                    threshold=config.get_float("consistency.threshold", 0.0),
                    reference_index=ref,
                )
            elif scheme == "exclusive":
                cmap = binary_exclusivity(others, reference, reference_index=ref)
            else:
                raise ValueError(f"unknown consistency.scheme {scheme!r}")
            path = out_dir / f"consistency_{scheme}_ref{ref + 1:03d}.txt"
            write_scores(path, universe, cmap.scores)
            artifacts.append(path)
        elif ref_policy != "all":
            raise ValueError(f"unknown reference.policy {ref_policy!r}")

        stage = "maps"
        wmap = weighted_average_map(partitions)
        wpath = out_dir / "weighted_map.txt"
        write_scores(wpath, universe, wmap.scores)
        artifacts.append(wpath)
        wside = out_dir / "weighted_map.json"
        write_sidecar(
            wside, scheme="scaled", n=len(partitions), weights=wmap.weights
        )
        artifacts.append(wside)

        amap = argmax_reference_map(partitions)
        apath = out_dir / "argmax_map.txt"
        write_scores(apath, universe, amap.best_reference)
        artifacts.append(apath)
        aside = out_dir / "argmax_map.json"
        write_sidecar(aside, scheme="scaled", n=len(partitions), indexing="1-based")
        artifacts.append(aside)

        if "signed.community" in config.values:
            ref = config.get_int("reference.index")
            cid = config.get_int("signed.community")
            smap = signed_community_map(partitions, ref, cid)
            spath = out_dir / f"signed_ref{ref + 1:03d}_c{cid:03d}.txt"
            write_scores(spath, universe, smap.scores)
            artifacts.append(spath)

        stage = "render"
        if "render.coordinates" in config.values:
            layout = load_coordinates(config.get("render.coordinates"), universe)
            if "render.boundary" in config.values:
                from dataclasses import replace

                layout = replace(
                    layout, boundary=load_boundary(config.get("render.boundary"))
                )
            width = config.get_int("render.width", 1200)
            height = config.get_int("render.height", 600)
            raster = voronoi_raster(layout, width, height)
            rpath = out_dir / "weighted_map.svg"
            render_scalar_map(
                raster,
                wmap.scores,
                palette=config.get("render.palette", "sequential"),
                out_path=rpath,
            )
            artifacts.append(rpath)

        stage = "manifest"
        manifest = {
            "config": dict(sorted(config.values.items())),
            "artifacts": [
                {"path": p.name, "sha256": _sha256(p)} for p in artifacts
            ],
        }
        (out_dir / "manifest.json").write_text(
            json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        return manifest
    except Exception as exc:
        for p in artifacts:
            p.unlink(missing_ok=True)
        kind = OSError if isinstance(exc, OSError) else ValueError
        raise kind(f"pipeline stage {stage!r} failed: {exc}") from exc

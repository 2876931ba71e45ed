"""Shared text output helpers for reports and score files."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .graph import NodeUniverse

__all__ = [
    "write_scores",
    "read_scores",
    "write_similarity_report",
    "write_sidecar",
]


def write_scores(path: str | Path, universe: NodeUniverse, scores) -> None:
    """Per-node score file, canonical node order, 12 significant digits."""
    scores = np.asarray(scores)
    with open(path, "w", encoding="utf-8") as fh:
        for label, value in zip(universe.labels, scores):
            if isinstance(value, (np.integer, int)):
                fh.write(f"{label}\t{int(value)}\n")
            else:
                fh.write(f"{label}\t{float(value):.12g}\n")


def read_scores(path: str | Path, universe: NodeUniverse) -> np.ndarray:
    index = universe.index()
    out = np.full(len(universe), np.nan)
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            label, value = line.split("\t")
            out[index[label]] = float(value)
    if np.isnan(out).any():
        raise ValueError(f"{path}: missing scores for some nodes")
    return out


def write_similarity_report(path: str | Path, j: np.ndarray, weights) -> None:
    """J matrix and weights, fixed 6-decimal formatting for diffability."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# pairwise Jaccard matrix\n")
        for row in np.asarray(j):
            fh.write("\t".join(f"{x:.6f}" for x in row) + "\n")
        fh.write("# weights\n")
        fh.write("\t".join(f"{w:.6f}" for w in np.asarray(weights)) + "\n")


def write_sidecar(path: str | Path, **metadata) -> None:
    def default(o):
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, (np.integer,)):
            return int(o)
        if isinstance(o, (np.floating,)):
            return float(o)
        raise TypeError(type(o).__name__)

    Path(path).write_text(
        json.dumps(metadata, indent=2, sort_keys=True, default=default) + "\n",
        encoding="utf-8",
    )

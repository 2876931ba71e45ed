"""Graph and partition data model with deterministic text IO.

All types are immutable after construction and safe to share across
threads. Node order is canonical: it is the first-appearance order in the
edge-list file (or the declared node-universe file), and every output is
written in that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "Partition",
    "NodeUniverse",
    "load_edge_list",
    "load_node_universe",
    "load_partition",
    "save_edge_list",
    "save_partition",
    "community_members",
]


@dataclass(frozen=True)
class NodeUniverse:
    """Stable string labels, one per node index."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            seen = set()
            dup = next(l for l in self.labels if l in seen or seen.add(l))
            raise ValueError(f"duplicate node label {dup!r}")

    def __len__(self) -> int:
        return len(self.labels)

    def index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}


@dataclass(frozen=True)
class Graph:
    """Undirected, unweighted, simple graph over a fixed node universe.

    Edges are stored as unordered index pairs (u, v) with u < v.
    """

    node_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.node_count < 1:
            raise ValueError("graph must have at least one node")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop on node {u}")
            if not (0 <= u < v < self.node_count):
                raise ValueError(f"edge ({u}, {v}) out of range or unordered")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def degree_sum(self) -> int:
        """Twice the edge count (sum of all node degrees)."""
        return 2 * len(self.edges)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.node_count, dtype=np.int64)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    @staticmethod
    def from_edges(node_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
        return Graph(node_count=node_count, edges=norm)


@dataclass(frozen=True)
class Partition:
    """Complete assignment of every node to exactly one community.

    Community ids are contiguous integers [0, community_count), each used by
    at least one node.
    """

    membership: tuple[int, ...]
    community_count: int = field(default=0)

    def __post_init__(self):
        if not self.membership:
            raise ValueError("partition over an empty node set")
        used = set(self.membership)
        m = self.community_count or (max(used) + 1)
        object.__setattr__(self, "community_count", m)
        if used != set(range(m)):
            raise ValueError(
                "community ids must be contiguous [0, m) and all used; "
                f"got {sorted(used)}"
            )

    @property
    def node_count(self) -> int:
        return len(self.membership)

    @staticmethod
    def from_labels(labels: Sequence) -> "Partition":
        """Build a partition from arbitrary hashable labels.

        Ids are remapped to contiguous integers in order of first appearance,
        so the result never depends on the arbitrary numbering of the input.
        """
        remap: dict = {}
        membership = []
        for lab in labels:
            if lab not in remap:
                remap[lab] = len(remap)
            membership.append(remap[lab])
        return Partition(tuple(membership), len(remap))

    def members(self, community_id: int) -> frozenset[int]:
        if not (0 <= community_id < self.community_count):
            raise ValueError(
                f"community id {community_id} out of range "
                f"[0, {self.community_count})"
            )
        return frozenset(
            i for i, c in enumerate(self.membership) if c == community_id
        )

    def communities(self) -> list[frozenset[int]]:
        groups: list[list[int]] = [[] for _ in range(self.community_count)]
        for i, c in enumerate(self.membership):
            groups[c].append(i)
        return [frozenset(g) for g in groups]

    def sizes(self) -> np.ndarray:
        return np.bincount(
            np.asarray(self.membership), minlength=self.community_count
        )


def community_members(partition: Partition, community_id: int) -> frozenset[int]:
    """Set of node indices assigned to ``community_id``."""
    return partition.members(community_id)


def _data_lines(path: Path) -> Iterable[tuple[int, str]]:
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            yield lineno, line


def load_node_universe(path: str | Path) -> NodeUniverse:
    """Read a node-universe file: one label per line."""
    labels = [line for _, line in _data_lines(Path(path))]
    if not labels:
        raise ValueError(f"{path}: no node labels")
    return NodeUniverse(tuple(labels))


def load_edge_list(
    path: str | Path, universe: NodeUniverse | None = None
) -> tuple[Graph, NodeUniverse]:
    """Read an edge list (one ``labelA<TAB>labelB`` per line).

    Duplicate lines and reversed duplicates collapse to a single edge.
    If no universe is given, node order is the order of first appearance.
    A pre-declared universe allows isolated nodes (degree 0).
    """
    path = Path(path)
    index: dict[str, int]
    labels: list[str]
    if universe is None:
        index, labels = {}, []
    else:
        index, labels = universe.index(), list(universe.labels)

    def node_of(label: str, lineno: int) -> int:
        if label in index:
            return index[label]
        if universe is not None:
            raise ValueError(f"{path}:{lineno}: unknown label {label!r}")
        index[label] = len(labels)
        labels.append(label)
        return index[label]

    edges: set[tuple[int, int]] = set()
    for lineno, line in _data_lines(path):
        fields = line.split("\t") if "\t" in line else line.split()
        if len(fields) != 2:
            raise ValueError(f"{path}:{lineno}: expected two labels, got {line!r}")
        u = node_of(fields[0], lineno)
        v = node_of(fields[1], lineno)
        if u == v:
            raise ValueError(f"{path}:{lineno}: self-loop on {fields[0]!r}")
        edges.add((min(u, v), max(u, v)))
    if not edges:
        raise ValueError(f"{path}: no edges")
    graph = Graph(node_count=len(labels), edges=frozenset(edges))
    return graph, NodeUniverse(tuple(labels))


def save_edge_list(path: str | Path, graph: Graph, universe: NodeUniverse) -> None:
    lines = sorted(graph.edges)
    with open(path, "w", encoding="utf-8") as fh:
        for u, v in lines:
            fh.write(f"{universe.labels[u]}\t{universe.labels[v]}\n")


def load_partition(path: str | Path, universe: NodeUniverse) -> Partition:
    """Read a partition file (``label<TAB>community_id`` per line).

    Every universe label must appear exactly once; ids are remapped to
    contiguous [0, m) in first-appearance order over the canonical node order.
    """
    path = Path(path)
    index = universe.index()
    raw: dict[int, int] = {}
    for lineno, line in _data_lines(path):
        fields = line.split("\t") if "\t" in line else line.split()
        if len(fields) != 2:
            raise ValueError(
                f"{path}:{lineno}: expected `label<TAB>id`, got {line!r}"
            )
        label, id_text = fields
        if label not in index:
            raise ValueError(f"{path}:{lineno}: unknown label {label!r}")
        node = index[label]
        if node in raw:
            raise ValueError(f"{path}:{lineno}: duplicate label {label!r}")
        try:
            raw[node] = int(id_text)
        except ValueError:
            raise ValueError(
                f"{path}:{lineno}: community id {id_text!r} is not an integer"
            ) from None
    missing = [lab for lab, i in index.items() if i not in raw]
    if missing:
        raise ValueError(f"{path}: missing node {missing[0]!r}")
    return Partition.from_labels([raw[i] for i in range(len(universe))])


def save_partition(
    path: str | Path, partition: Partition, universe: NodeUniverse
) -> None:
    if partition.node_count != len(universe):
        raise ValueError("partition and universe sizes differ")
    with open(path, "w", encoding="utf-8") as fh:
        for label, cid in zip(universe.labels, partition.membership):
            fh.write(f"{label}\t{cid}\n")

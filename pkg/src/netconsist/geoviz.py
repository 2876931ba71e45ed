"""Geographic layout, nearest-site rasterization, and scalar map rendering.

Nodes carry (longitude, latitude) coordinates; a boundary polygon set
defines the drawable region. Every pixel inside the boundary is owned by
the node nearest in plain equirectangular coordinates (Euclidean on
lon/lat, ties to the lowest node index). Scalar per-node values are
rendered by coloring each pixel with its owner's value; output is SVG
built from run-length rectangles, with optional PNG rasterization.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from matplotlib import colormaps
from matplotlib.path import Path as MplPath

from .graph import NodeUniverse, Partition

__all__ = [
    "GeoLayout",
    "RasterAssignment",
    "OUTSIDE",
    "load_coordinates",
    "load_boundary",
    "voronoi_raster",
    "render_scalar_map",
    "save_png",
    "assign_nodes_to_sites",
]

OUTSIDE = -1

PALETTES = ("sequential", "diverging", "categorical")
_CMAPS = {"sequential": "viridis", "diverging": "coolwarm"}


@dataclass(frozen=True)
class GeoLayout:
    coordinates: np.ndarray  # (v, 2) columns lon, lat
    boundary: tuple[np.ndarray, ...]  # closed polygons, each (k, 2)

    def __post_init__(self):
        coords = np.asarray(self.coordinates, dtype=float)
        object.__setattr__(self, "coordinates", coords)
        if coords.ndim != 2 or coords.shape[1] != 2 or coords.shape[0] < 1:
            raise ValueError("coordinates must be a (v, 2) array")
        if not np.isfinite(coords).all():
            raise ValueError("coordinates must be finite")
        polys = tuple(np.asarray(p, dtype=float) for p in self.boundary)
        object.__setattr__(self, "boundary", polys)
        for p in polys:
            if p.ndim != 2 or p.shape[1] != 2 or p.shape[0] < 3:
                raise ValueError("each boundary polygon needs >= 3 vertices")


@dataclass(frozen=True)
class RasterAssignment:
    width: int
    height: int
    owner: np.ndarray  # (height, width) node index, OUTSIDE beyond boundary


def load_coordinates(path: str | Path, universe: NodeUniverse) -> GeoLayout:
    """Read `label<TAB>longitude<TAB>latitude` lines; the boundary defaults
    to the coordinates' bounding box (use load_boundary to replace it)."""
    index = universe.index()
    coords = np.full((len(universe), 2), np.nan)
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t") if "\t" in line else line.split()
            if len(fields) != 3:
                raise ValueError(f"{path}:{lineno}: expected label, lon, lat")
            label, lon, lat = fields
            if label not in index:
                raise ValueError(f"{path}:{lineno}: unknown label {label!r}")
            coords[index[label]] = (float(lon), float(lat))
    if np.isnan(coords).any():
        missing = universe.labels[int(np.isnan(coords[:, 0]).argmax())]
        raise ValueError(f"{path}: missing coordinates for {missing!r}")
    return GeoLayout(coordinates=coords, boundary=(_bbox_polygon(coords),))


def _bbox_polygon(coords: np.ndarray, pad: float = 1.0) -> np.ndarray:
    x0, y0 = coords.min(axis=0) - pad
    x1, y1 = coords.max(axis=0) + pad
    return np.array([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])


def load_boundary(path: str | Path) -> tuple[np.ndarray, ...]:
    """Read blank-line-separated blocks of `lon<TAB>lat` vertices."""
    polys: list[np.ndarray] = []
    current: list[tuple[float, float]] = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                if current:
                    polys.append(np.array(current))
                    current = []
                continue
            if line.startswith("#"):
                continue
            fields = line.split("\t") if "\t" in line else line.split()
            current.append((float(fields[0]), float(fields[1])))
    if current:
        polys.append(np.array(current))
    if not polys:
        raise ValueError(f"{path}: no boundary polygons")
    return tuple(polys)


def voronoi_raster(
    layout: GeoLayout, width: int = 1200, height: int = 600
) -> RasterAssignment:
    """Assign each inside-boundary pixel to its nearest node."""
    all_vertices = np.vstack(layout.boundary)
    x0, y0 = all_vertices.min(axis=0)
    x1, y1 = all_vertices.max(axis=0)
    if x1 <= x0 or y1 <= y0:
        raise ValueError("boundary has zero area")

    xs = x0 + (np.arange(width) + 0.5) * (x1 - x0) / width
    ys = y1 - (np.arange(height) + 0.5) * (y1 - y0) / height  # north at top
    owner = np.full((height, width), OUTSIDE, dtype=np.int64)
    coords = layout.coordinates
    paths = [MplPath(p) for p in layout.boundary]

    for row in range(height):
        centers = np.column_stack([xs, np.full(width, ys[row])])
        inside = np.zeros(width, dtype=bool)
        for p in paths:
            inside |= p.contains_points(centers)
        if not inside.any():
            continue
        pts = centers[inside]
        # argmin over nodes; first occurrence breaks exact ties lowest-index
        d2 = ((pts[:, None, :] - coords[None, :, :]) ** 2).sum(axis=2)
        owner[row, inside] = np.argmin(d2, axis=1)
    return RasterAssignment(width=width, height=height, owner=owner)


def _node_colors(values: np.ndarray, palette: str) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if not np.isfinite(values).all():
        raise ValueError("values must be finite")
    if palette == "categorical":
        cmap = colormaps["tab20"]
        return np.array([cmap(int(v) % 20)[:3] for v in values])
    if palette == "diverging":
        vmax = max(np.abs(values).max(), 1e-300)
        normed = 0.5 + values / (2 * vmax)
    elif palette == "sequential":
        lo, hi = values.min(), values.max()
        normed = np.full_like(values, 0.5) if hi == lo else (values - lo) / (hi - lo)
    else:
        raise ValueError(f"unknown palette {palette!r}; options: {PALETTES}")
    cmap = colormaps[_CMAPS[palette]]
    return np.array([cmap(t)[:3] for t in normed])


def _hex(rgb) -> str:
    r, g, b = (int(round(255 * c)) for c in rgb)
    return f"#{r:02x}{g:02x}{b:02x}"


def render_scalar_map(
    raster: RasterAssignment,
    values,
    palette: str = "sequential",
    out_path: str | Path | None = None,
) -> str:
    """Render per-node values over the raster as an SVG string.

    Rows are emitted as run-length rectangles; a legend strip with the value
    range sits below the map. Pass ``out_path`` to also write the file.
    """
    values = np.asarray(values, dtype=float)
    colors = _node_colors(values, palette)
    hexes = [_hex(c) for c in colors]
    w, h = raster.width, raster.height
    legend_h = max(20, h // 12)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" '
        f'height="{h + legend_h}" shape-rendering="crispEdges">'
    ]
    owner = raster.owner
    for row in range(h):
        line = owner[row]
        start = 0
        while start < w:
            node = line[start]
            end = start
            while end < w and line[end] == node:
                end += 1
            if node != OUTSIDE:
                parts.append(
                    f'<rect x="{start}" y="{row}" width="{end - start}" '
                    f'height="1" fill="{hexes[node]}"/>'
                )
            start = end
    parts.extend(_legend(values, palette, w, h, legend_h))
    parts.append("</svg>")
    svg = "\n".join(parts)
    if out_path is not None:
        Path(out_path).write_text(svg, encoding="utf-8")
    return svg


def _legend(values: np.ndarray, palette: str, w: int, y0: int, legend_h: int):
    bar_y = y0 + 4
    bar_h = max(6, legend_h - 14)
    font = max(8, bar_h)
    if palette == "categorical":
        ids = sorted({int(v) for v in values})
        cmap = colormaps["tab20"]
        sw = max(8, min(24, w // max(len(ids), 1)))
        for i, cid in enumerate(ids):
            yield (
                f'<rect x="{i * sw}" y="{bar_y}" width="{sw - 2}" '
                f'height="{bar_h}" fill="{_hex(cmap(cid % 20)[:3])}"/>'
            )
        yield (
            f'<text x="0" y="{bar_y + bar_h + font}" font-size="{font}">'
            f"ids {ids[0]}..{ids[-1]}</text>"
        )
        return
    cmap = colormaps[_CMAPS[palette]]
    steps = 100
    step_w = w / steps
    for i in range(steps):
        yield (
            f'<rect x="{i * step_w:.2f}" y="{bar_y}" width="{step_w + 0.5:.2f}" '
            f'height="{bar_h}" fill="{_hex(cmap(i / (steps - 1))[:3])}"/>'
        )
    if palette == "diverging":
        vmax = max(float(np.abs(values).max()), 0.0)
        lo, hi = -vmax, vmax
    else:
        lo, hi = float(values.min()), float(values.max())
    yield (
        f'<text x="0" y="{bar_y + bar_h + font}" font-size="{font}">'
        f"{lo:.6g}</text>"
    )
    yield (
        f'<text x="{w}" y="{bar_y + bar_h + font}" font-size="{font}" '
        f'text-anchor="end">{hi:.6g}</text>'
    )


def save_png(
    raster: RasterAssignment,
    values,
    palette: str = "sequential",
    out_path: str | Path = "map.png",
    background=(1.0, 1.0, 1.0),
) -> None:
    """Rasterize the owner grid directly to a PNG (no legend)."""
    from PIL import Image

    colors = _node_colors(np.asarray(values, dtype=float), palette)
    table = np.vstack([colors, [background]])  # OUTSIDE maps to the last row
    img = (table[raster.owner] * 255).astype(np.uint8)
    Image.fromarray(img, mode="RGB").save(out_path)


def assign_nodes_to_sites(planted: Partition, layout: GeoLayout) -> np.ndarray:
    """Deterministic geographic stand-in for a manual community placement.

    Communities are processed largest first (ties by id). Each grows
    greedily: seed at the unassigned site nearest the previous community's
    centroid (initially the centroid of all sites), then repeatedly absorb
    the unassigned site nearest the growing community's centroid. Community
    sizes are preserved exactly. Returns node index -> site index.
    """
    sites = layout.coordinates
    if len(sites) != planted.node_count:
        raise ValueError(
            f"{len(sites)} sites for {planted.node_count} nodes"
        )
    sizes = planted.sizes()
    order = sorted(range(planted.community_count), key=lambda c: (-sizes[c], c))
    unassigned = np.ones(len(sites), dtype=bool)
    focus = sites.mean(axis=0)
    community_sites: dict[int, list[int]] = {}
    for c in order:
        chosen: list[int] = []
        target = focus
        for _ in range(int(sizes[c])):
            d2 = ((sites - target) ** 2).sum(axis=1)
            d2[~unassigned] = np.inf
            s = int(np.argmin(d2))  # lowest index on exact ties
            chosen.append(s)
            unassigned[s] = False
            target = sites[chosen].mean(axis=0)
        community_sites[c] = sorted(chosen)
        focus = sites[chosen].mean(axis=0)
    mapping = np.empty(planted.node_count, dtype=np.int64)
    for c, members in enumerate(planted.communities()):
        for node, site in zip(sorted(members), community_sites[c]):
            mapping[node] = site
    return mapping

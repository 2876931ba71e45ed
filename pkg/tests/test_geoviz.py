import inspect

import numpy as np
import pytest

from netconsist.geoviz import (
    OUTSIDE,
    GeoLayout,
    assign_nodes_to_sites,
    load_boundary,
    load_coordinates,
    render_scalar_map,
    save_png,
    voronoi_raster,
)
from netconsist.graph import NodeUniverse, Partition


def square_layout(coords):
    coords = np.asarray(coords, dtype=float)
    pad = 1.0
    x0, y0 = coords.min(axis=0) - pad
    x1, y1 = coords.max(axis=0) + pad
    boundary = (np.array([(x0, y0), (x1, y0), (x1, y1), (x0, y1)]),)
    return GeoLayout(coordinates=coords, boundary=boundary)


class TestVoronoiRaster:
    def test_single_node_owns_everything(self):
        layout = square_layout([(0.0, 0.0)])
        raster = voronoi_raster(layout, 16, 16)
        assert np.all(raster.owner == 0)

    def test_tie_goes_to_lowest_index(self):
        # nodes 2 and 5 sit symmetrically about x = 0; center pixels tie
        coords = [(9, 9), (9, -9), (-1.0, 0.0), (9, 8), (9, -8), (1.0, 0.0)]
        layout = GeoLayout(
            coordinates=np.array(coords, dtype=float),
            boundary=(np.array([(-2.0, -1.0), (2.0, -1.0), (2.0, 1.0), (-2.0, 1.0)]),),
        )
        raster = voronoi_raster(layout, 4, 2)  # center column pixels at x = 0
        middle = raster.owner[:, 1:3]
        # pixel centers at x = -0.5 and +0.5 are owned by nodes 2 and 5
        assert np.array_equal(middle[:, 0], [2, 2])
        assert np.array_equal(middle[:, 1], [5, 5])
        exact_tie = GeoLayout(
            coordinates=np.array(coords, dtype=float),
            boundary=(np.array([(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)]),),
        )
        raster = voronoi_raster(exact_tie, 1, 1)  # single pixel centered at 0,0
        assert raster.owner[0, 0] == 2

    def test_default_dimensions(self):
        sig = inspect.signature(voronoi_raster)
        assert sig.parameters["width"].default == 1200
        assert sig.parameters["height"].default == 600

    def test_outside_pixels_unowned(self):
        layout = GeoLayout(
            coordinates=np.array([(0.0, 0.0)]),
            boundary=(np.array([(-1.0, -1.0), (1.0, -1.0), (0.0, 1.0)]),),
        )
        raster = voronoi_raster(layout, 10, 10)
        assert (raster.owner == OUTSIDE).any()
        assert (raster.owner == 0).any()

    def test_zero_area_boundary(self):
        layout = GeoLayout(
            coordinates=np.array([(0.0, 0.0)]),
            boundary=(np.array([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]),),
        )
        with pytest.raises(ValueError, match="zero area"):
            voronoi_raster(layout, 4, 4)

    def test_relabel_equivariance(self, rng):
        coords = rng.uniform(-5, 5, size=(6, 2))
        layout = square_layout(coords)
        raster = voronoi_raster(layout, 20, 20)
        perm = rng.permutation(6)
        permuted = square_layout(coords[perm])
        raster_p = voronoi_raster(permuted, 20, 20)
        mask = raster.owner != OUTSIDE
        assert np.array_equal(raster.owner[mask], perm[raster_p.owner[mask]])


class TestRenderScalarMap:
    def test_uniform_values_single_color(self):
        layout = square_layout([(0.0, 0.0), (2.0, 0.0)])
        raster = voronoi_raster(layout, 8, 8)
        svg = render_scalar_map(raster, [3.0, 3.0])
        fills = {
            part.split('fill="')[1].split('"')[0]
            for part in svg.splitlines()
            if 'y="0"' in part or 'y="4"' in part
        }
        assert len(fills) == 1

    def test_diverging_palette_symmetric(self):
        layout = square_layout([(-1.0, 0.0), (1.0, 0.0)])
        raster = voronoi_raster(layout, 8, 4)
        svg = render_scalar_map(raster, [1.0, -1.0], palette="diverging")
        from netconsist.geoviz import _node_colors

        colors = _node_colors(np.array([1.0, -1.0]), "diverging")
        # coolwarm endpoints: extremes map to the two ends of the palette
        mid = _node_colors(np.array([0.0, 1.0]), "diverging")[0]
        assert not np.allclose(colors[0], colors[1])
        assert "<svg" in svg and "</svg>" in svg

    def test_non_finite_values_error(self):
        layout = square_layout([(0.0, 0.0)])
        raster = voronoi_raster(layout, 4, 4)
        with pytest.raises(ValueError, match="finite"):
            render_scalar_map(raster, [np.nan])

    def test_categorical_palette_and_file_output(self, tmp_path):
        layout = square_layout([(0.0, 0.0), (3.0, 0.0), (0.0, 3.0)])
        raster = voronoi_raster(layout, 12, 12)
        out = tmp_path / "map.svg"
        svg = render_scalar_map(raster, [0, 1, 2], palette="categorical", out_path=out)
        assert out.read_text(encoding="utf-8") == svg

    def test_png_output(self, tmp_path):
        layout = square_layout([(0.0, 0.0), (3.0, 0.0)])
        raster = voronoi_raster(layout, 12, 6)
        out = tmp_path / "map.png"
        save_png(raster, [0.0, 1.0], out_path=out)
        assert out.stat().st_size > 0


class TestAssignNodesToSites:
    def test_single_community(self):
        layout = square_layout([(0, 0), (1, 0), (2, 0)])
        mapping = assign_nodes_to_sites(Partition((0, 0, 0)), layout)
        assert sorted(mapping) == [0, 1, 2]

    def test_collinear_contiguous_runs(self):
        layout = square_layout([(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)])
        planted = Partition((0, 0, 0, 1, 1))  # sizes 3 and 2
        mapping = assign_nodes_to_sites(planted, layout)
        runs = {c: sorted(mapping[list(planted.members(c))]) for c in (0, 1)}
        assert runs[0] == [1, 2, 3] or runs[0] == [0, 1, 2]
        assert max(runs[0]) + 1 == min(runs[1]) or max(runs[1]) + 1 == min(runs[0])

    def test_preserves_sizes_and_deterministic(self, rng):
        coords = rng.uniform(0, 10, size=(12, 2))
        layout = square_layout(coords)
        planted = Partition.from_labels(list(rng.integers(0, 3, size=12)))
        a = assign_nodes_to_sites(planted, layout)
        b = assign_nodes_to_sites(planted, layout)
        assert np.array_equal(a, b)
        assert sorted(a) == list(range(12))
        for c in range(planted.community_count):
            assert len({a[i] for i in planted.members(c)}) == len(planted.members(c))

    def test_count_mismatch(self):
        layout = square_layout([(0, 0), (1, 1)])
        with pytest.raises(ValueError):
            assign_nodes_to_sites(Partition((0, 0, 0)), layout)


class TestFileIO:
    def test_coordinates_roundtrip(self, tmp_path):
        uni = NodeUniverse(("a", "b"))
        path = tmp_path / "coords.txt"
        path.write_text("a\t-80.0\t35.0\nb\t-100.0\t40.0\n", encoding="utf-8")
        layout = load_coordinates(path, uni)
        assert np.array_equal(layout.coordinates, [(-80.0, 35.0), (-100.0, 40.0)])

    def test_missing_coordinates(self, tmp_path):
        uni = NodeUniverse(("a", "b"))
        path = tmp_path / "coords.txt"
        path.write_text("a\t-80.0\t35.0\n", encoding="utf-8")
        with pytest.raises(ValueError, match="'b'"):
            load_coordinates(path, uni)

    def test_boundary_blocks(self, tmp_path):
        path = tmp_path / "boundary.txt"
        path.write_text(
            "0 0\n1 0\n1 1\n0 1\n\n5 5\n6 5\n6 6\n", encoding="utf-8"
        )
        polys = load_boundary(path)
        assert len(polys) == 2
        assert polys[0].shape == (4, 2)

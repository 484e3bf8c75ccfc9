"""Closest-point and shortest-vector search against brute-force references."""

import math

import numpy as np
import pytest

from gkplat.catalog import get
from gkplat.decoder import (
    MAX_DIM,
    closest_point,
    in_voronoi_cell,
    packing_radius,
    shortest_vector,
)
from gkplat.symplectic_lattice import dual_lattice, rescale

from oracles import BruteForceCVP, reference_closest


class TestClosestPoint:
    def test_plane_interior(self):
        res = closest_point(get("Zn(2)").lattice, [0.4, -0.3])
        assert np.array_equal(res.closest, [0.0, 0.0])
        assert res.dist_sq == pytest.approx(0.25)
        assert not res.tie

    def test_plane_boundary_tie(self):
        res = closest_point(get("Zn(2)").lattice, [0.5, 0.0])
        assert res.tie

    def test_lattice_points_decode_to_themselves(self):
        rng = np.random.default_rng(3)
        for name in ["Zn(4)", "D4", "E8", "grid_qudit(3)"]:
            lat = get(name).lattice
            m = lat.effective_matrix()
            for _ in range(20):
                coeffs = rng.integers(-3, 4, size=lat.n)
                v = coeffs.astype(float) @ m
                res = closest_point(lat, v)
                assert np.array_equal(res.coeffs, coeffs)
                assert res.dist_sq <= 1e-18 * (1.0 + float(v @ v))

    @pytest.mark.parametrize("name", ["Zn(2)", "Zn(4)", "D4", "E8"])
    def test_matches_reference_decoders(self, name):
        lat = get(name).lattice
        rng = np.random.default_rng(17)
        xs = rng.uniform(-2.0, 2.0, size=(1000, lat.n))
        for x in xs:
            res = closest_point(lat, x)
            _, ref_d = reference_closest(name, x)
            assert res.dist_sq == ref_d

    @pytest.mark.parametrize("name", ["Zn(2)", "D4"])
    def test_matches_coefficient_box(self, name):
        # small lattices also admit a direct exhaustive box search
        lat = get(name).lattice
        brute = BruteForceCVP(lat.effective_matrix(), 2)
        rng = np.random.default_rng(29)
        for x in rng.uniform(-2.0, 2.0, size=(200, lat.n)):
            _, brute_d = brute.closest(x)
            assert closest_point(lat, x).dist_sq == brute_d

    def test_dimension_bound(self):
        big = get(f"Zn({MAX_DIM + 2})").lattice
        with pytest.raises(ValueError):
            closest_point(big, [0.0] * (MAX_DIM + 2))


class TestVoronoi:
    def test_origin_inside(self):
        for name in ["Zn(2)", "D4", "E8"]:
            assert in_voronoi_cell(get(name).lattice, [0.0] * get(name).lattice.n)

    def test_outside_point(self):
        assert not in_voronoi_cell(get("Zn(2)").lattice, [0.6, 0.2])

    def test_near_corner_inside(self):
        assert in_voronoi_cell(get("Zn(2)").lattice, [0.49, 0.49])

    def test_central_symmetry(self):
        rng = np.random.default_rng(23)
        for name in ["Zn(2)", "D4", "E8"]:
            lat = get(name).lattice
            for x in rng.uniform(-1.0, 1.0, size=(200, lat.n)):
                assert in_voronoi_cell(lat, x) == in_voronoi_cell(lat, -x)


class TestShortestVector:
    def test_cubic(self):
        for n in [2, 4, 8]:
            _, length_sq = shortest_vector(get(f"Zn({n})").lattice)
            assert length_sq == pytest.approx(1.0)

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_grid_qudit_normalizer(self, d):
        normalizer = dual_lattice(get(f"grid_qudit({d})").lattice)
        _, length_sq = shortest_vector(normalizer)
        assert length_sq == pytest.approx(1.0 / d, rel=1e-12)

    def test_d4(self):
        vec, length_sq = shortest_vector(get("D4").lattice)
        assert length_sq == pytest.approx(2.0)
        assert float(vec @ vec) == pytest.approx(2.0)

    def test_returned_vector_is_lattice_point(self):
        lat = get("E8").lattice
        vec, length_sq = shortest_vector(lat)
        coeffs = vec @ np.linalg.inv(lat.effective_matrix())
        assert np.allclose(coeffs, np.rint(coeffs), atol=1e-9)


class TestPackingRadius:
    def test_cubic(self):
        assert packing_radius(get("Zn(6)").lattice) == pytest.approx(0.5)

    def test_e8(self):
        assert packing_radius(get("E8").lattice) == pytest.approx(math.sqrt(2) / 2)

    def test_rescaled_plane(self):
        lat = rescale(get("Zn(2)").lattice, 4)
        assert packing_radius(lat) == pytest.approx(1.0)

    def test_scaling_law(self):
        base = get("Zn(4)").lattice
        for lam in [2, 3, 5]:
            scaled = rescale(base, lam)
            assert packing_radius(scaled) == pytest.approx(
                math.sqrt(lam) * packing_radius(base), rel=1e-12)

import math
import unittest

import numpy as np

from hypolygons.construction.optimal import (
    block_level_for_width, block_width, construct_optimal, cusp_edge_length, half_edge_length,
    optimal_construction, reconstruct_from_lengths
)
from hypolygons.geometry.center import CONE, CUSP, GEODESIC, equidistant_level, make_center
from hypolygons.geometry.errors import InfeasibleBlockError, InfeasibleSpecError, ReconstructionInfeasibleError
from hypolygons.geometry.lorentz import lorentz_dot
from hypolygons.geometry.polygon_space import angle_spec
from hypolygons.optimize.perimeter import perimeter_optimizer
from tests.mocks.polygons import CASES, THIRD, optimal, random_member
class test_cusp_edge_length(unittest.TestCase):

    def test_values(self):

        self.assertAlmostEqual(math.log(3), cusp_edge_length(2 * THIRD), places=14)
        self.assertAlmostEqual(2 * math.log(1 + math.sqrt(2)), cusp_edge_length(math.pi / 2), places=14)
        self.assertLess(cusp_edge_length(math.pi - 1e-9), 1e-8)

    def test_decreasing(self):

        values = [cusp_edge_length(b) for b in np.linspace(0.1, 3.0, 30)]

        self.assertTrue(all(a > b for (a, b) in zip(values, values[1:])))

    def test_invalid(self):

        for beta in [0.0, math.pi, -1.0, math.nan]:
            with self.assertRaises(InfeasibleSpecError):
                cusp_edge_length(beta)

    def test_single_vertex_polygon(self):

        # one vertex around a cusp: the edge length does not depend on anything else
        for beta in np.linspace(0.1, math.pi - 0.1, 50):
            (params, poly, certificate) = construct_optimal(make_center(CUSP), angle_spec([beta]))
            self.assertAlmostEqual(cusp_edge_length(beta), poly.perimeter, delta=1e-10)

    def test_sum_over_vertices(self):

        angles = [1.0, 2.2, 1.6, 0.9, 2.5]
        (params, poly, certificate) = construct_optimal(make_center(CUSP), angle_spec(angles))

        self.assertAlmostEqual(sum(cusp_edge_length(b) for b in angles), poly.perimeter, delta=1e-10)

    def test_regular(self):

        for n in range(1, 9):
            (params, poly, certificate) = construct_optimal(make_center(CUSP), angle_spec([2 * THIRD] * n))
            self.assertAlmostEqual(n * math.log(3), poly.perimeter, delta=1e-9)
class test_blocks(unittest.TestCase):

    def test_cone_limits(self):

        beta = 1.3
        tiny = equidistant_level.from_size(CONE, 1e-12)
        huge = equidistant_level.from_size(CONE, 40.0)

        self.assertAlmostEqual(math.pi - beta, block_width(CONE, tiny, beta), places=10)
        self.assertLess(block_width(CONE, huge, beta), 1e-15)

    def test_widths_decrease(self):

        for kind in [CONE, GEODESIC, CUSP]:
            widths = [block_width(kind, equidistant_level.from_size(kind, size), 1.1) for size in [0.2, 0.5, 1.0, 3.0]]
            self.assertTrue(all(a > b for (a, b) in zip(widths, widths[1:])), msg=kind)

    def test_level_for_width(self):

        for kind in [CONE, GEODESIC, CUSP]:
            level = equidistant_level.from_size(kind, 0.8)
            width = block_width(kind, level, 1.1)
            self.assertAlmostEqual(level.value, block_level_for_width(kind, width, 1.1).value, places=10, msg=kind)

    def test_level_for_width_infeasible(self):

        with self.assertRaises(InfeasibleBlockError):
            block_level_for_width(CONE, math.pi - 1.0, 1.0)
        with self.assertRaises(InfeasibleBlockError):
            block_level_for_width(GEODESIC, 0.0, 1.0)

    def test_cusp_half_edges(self):

        level = equidistant_level.from_size(CUSP, 2.0)

        self.assertAlmostEqual(cusp_edge_length(1.2) / 2, half_edge_length(CUSP, level, 1.2), places=14)

    def test_half_edges_add_up(self):

        # every edge is made of the two half edges of its end points
        for (kind, parameter, angles) in CASES:
            (polygons, params, poly, certificate) = optimal(kind, parameter, angles)
            halves = sum(2 * half_edge_length(kind, certificate.level, b) for b in angles)
            self.assertAlmostEqual(halves, poly.perimeter, delta=1e-9, msg=kind)

    def test_wrong_level_kind(self):

        with self.assertRaises(ValueError):
            block_width(CONE, equidistant_level.from_size(CUSP, 1.0), 1.0)
class test_level(unittest.TestCase):

    def test_widths_fill_holonomy(self):

        for (kind, parameter, angles) in CASES:
            cf = make_center(kind, parameter)
            level = optimal_construction(cf, angle_spec(angles)).solve_equidistant_level()
            total = sum(block_width(kind, level, b) for b in angles)
            self.assertAlmostEqual(cf.holonomy, total, delta=1e-9, msg=kind)

    def test_cone_radius_vanishes(self):

        # alpha just below n pi - sum(beta) leaves a tiny circle
        angles = [2 * THIRD] * 3
        cf = make_center(CONE, math.pi - 1e-6)
        level = optimal_construction(cf, angle_spec(angles)).solve_equidistant_level()

        self.assertLess(level.size, 1e-2)

    def test_long_geodesic(self):

        cf = make_center(GEODESIC, 50.0)
        level = optimal_construction(cf, angle_spec([2 * THIRD] * 3)).solve_equidistant_level()

        self.assertLess(level.size, 1e-3)

    def test_infeasible_cone(self):

        with self.assertRaises(InfeasibleSpecError):
            construct_optimal(make_center(CONE, 3.5), angle_spec([2 * THIRD] * 3))
class test_construct(unittest.TestCase):

    def test_certificates(self):

        for (kind, parameter, angles) in CASES:
            (polygons, params, poly, certificate) = optimal(kind, parameter, angles)
            self.assertTrue(certificate.passed, msg=kind)
            self.assertLessEqual(certificate.residual, 1e-9)
            self.assertLessEqual(certificate.tangency_spread, 1e-9)
            values = polygons.cf.equidistant_values(poly.edge_lines)
            self.assertAlmostEqual(certificate.level.value, values[0], delta=1e-9)

    def test_edge_lines(self):

        # consecutive tangent lines meet at the prescribed angles
        cf = make_center(GEODESIC, 1.0)
        angles = [1.2, 2.0, 1.7]
        builder = optimal_construction(cf, angle_spec(angles))
        lines = builder.edge_lines(builder.solve_equidistant_level())

        self.assertEqual(4, len(lines))
        for i in range(3):
            product = lorentz_dot(lines[i], lines[i + 1])
            self.assertAlmostEqual(abs(math.cos(angles[i - 1])), abs(product), places=9)

    def test_chart_ray(self):

        for (kind, parameter, angles) in CASES:
            (polygons, params, poly, certificate) = optimal(kind, parameter, angles)
            self.assertTrue(polygons.cf.contains_l0(params.l0))
            self.assertAlmostEqual(0.0, poly.vertices[0][2], delta=1e-9)
class test_tangent_polygon(unittest.TestCase):

    def test_offset_is_block_width(self):

        for (kind, parameter, angles) in CASES:
            builder = optimal_construction(make_center(kind, parameter), angle_spec(angles))
            for size in [0.3, 1.0, 2.2]:
                level = equidistant_level.from_size(kind, size)
                for beta in angles:
                    self.assertAlmostEqual(
                        block_width(kind, level, beta), builder.block_offset(size, size, beta), delta=1e-10, msg=kind
                    )

    def test_equal_ratios_give_optimum(self):

        for (kind, parameter, angles) in CASES:
            (polygons, params, poly, certificate) = optimal(kind, parameter, angles)
            builder = optimal_construction(polygons.cf, polygons.spec)
            (tangent, tangent_poly) = builder.tangent_polygon([2.0] * len(angles))
            np.testing.assert_allclose(params.as_vector(), tangent.as_vector(), atol=1e-8, err_msg=kind)

    def test_sizes_follow_ratios(self):

        ratios = [1.0, 1.15, 0.9, 1.05, 0.95]
        for (kind, parameter, angles) in CASES:
            (polygons, params, poly, certificate) = optimal(kind, parameter, angles)
            builder = optimal_construction(polygons.cf, polygons.spec)
            (tangent, tangent_poly) = builder.tangent_polygon(ratios[:len(angles)])

            self.assertTrue(polygons.validate_membership(tangent_poly).passed, msg=kind)
            self.assertGreater(tangent_poly.perimeter, poly.perimeter)
            values = polygons.cf.equidistant_values(tangent_poly.edge_lines)
            sizes = np.array([equidistant_level(kind, value).size for value in values])
            np.testing.assert_allclose(sizes / sizes[0], ratios[:len(angles)], rtol=1e-7, err_msg=kind)

    def test_bad_ratios(self):

        builder = optimal_construction(make_center(CUSP), angle_spec([2 * THIRD] * 3))

        with self.assertRaises(ValueError):
            builder.tangent_polygon([1.0, 1.0])
        with self.assertRaises(ValueError):
            builder.tangent_polygon([1.0, 0.0, 1.0])
class test_reconstruct(unittest.TestCase):

    def test_round_trip(self):

        for (kind, parameter, angles) in CASES:
            (polygons, params, poly, certificate) = optimal(kind, parameter, angles)
            recovered = reconstruct_from_lengths(polygons.cf, polygons.spec, params.lengths)
            again = polygons.develop(recovered)

            np.testing.assert_allclose(
                polygons.cf.equidistant_values(poly.edge_lines),
                polygons.cf.equidistant_values(again.edge_lines),
                atol=1e-8,
                err_msg=kind
            )
            self.assertAlmostEqual(poly.perimeter, again.perimeter, delta=1e-8)
            self.assertAlmostEqual(params.l0, recovered.l0, delta=1e-8)

    def test_single_cusp_edge(self):

        beta = math.pi / 2
        recovered = reconstruct_from_lengths(make_center(CUSP), angle_spec([beta]), [cusp_edge_length(beta)])

        self.assertAlmostEqual(cusp_edge_length(beta), recovered.perimeter, places=12)

    def test_inconsistent_length(self):

        # a short edge turning by pi/2 is a rotation, not a parabolic
        with self.assertRaises(ReconstructionInfeasibleError) as context:
            reconstruct_from_lengths(make_center(CUSP), angle_spec([math.pi / 2]), [1e-3])

        self.assertEqual('cusp', context.exception.diagnostics['kind'])

    def test_wrong_cone_angle(self):

        (polygons, params, poly, certificate) = optimal(CONE, 1.2, [1.4, 2.0, 0.8, 1.1])

        with self.assertRaises(ReconstructionInfeasibleError):
            reconstruct_from_lengths(make_center(CONE, 1.0), polygons.spec, params.lengths)

    def test_wrong_geodesic_length(self):

        (polygons, params, poly, certificate) = optimal(GEODESIC, 1.0, [1.2, 2.0, 1.7])

        with self.assertRaises(ReconstructionInfeasibleError):
            reconstruct_from_lengths(make_center(GEODESIC, 1.5), polygons.spec, params.lengths)

    def test_bad_lengths(self):

        with self.assertRaises(ValueError):
            reconstruct_from_lengths(make_center(CUSP), angle_spec([1.0, 2.0]), [1.0])
        with self.assertRaises(ValueError):
            reconstruct_from_lengths(make_center(CUSP), angle_spec([1.0, 2.0]), [1.0, 0.0])

    def test_round_trip_random_members(self):

        for seed in range(100):
            (polygons, params) = random_member(seed)
            poly = polygons.develop(params)
            recovered = reconstruct_from_lengths(polygons.cf, polygons.spec, params.lengths)
            again = polygons.develop(recovered)

            msg = 'seed %d, %s' % (seed, polygons.cf.kind)
            self.assertLessEqual(again.residual, 1e-9, msg=msg)
            np.testing.assert_allclose(
                polygons.cf.equidistant_values(poly.edge_lines),
                polygons.cf.equidistant_values(again.edge_lines),
                rtol=1e-8,
                atol=1e-8,
                err_msg=msg
            )
            self.assertAlmostEqual(poly.perimeter, again.perimeter, delta=1e-8, msg=msg)

    def test_far_from_cone_point(self):

        # a thin cone pushes the polygon far out, where l0 needs to be exact to close
        (polygons, params, poly, certificate) = optimal(CONE, 0.1601, [1.2, 2.0, 1.5, 0.9, 2.4])
        self.assertGreater(params.l0, 4.0)

        starts = [params] + [perimeter_optimizer(polygons).random_feasible(seed) for seed in range(5)]
        for start in starts:
            recovered = reconstruct_from_lengths(polygons.cf, polygons.spec, start.lengths)
            self.assertLessEqual(np.linalg.norm(polygons.closure_residual(recovered)), 1e-9)
            self.assertAlmostEqual(start.l0, recovered.l0, delta=1e-8)
            polygons.develop(recovered)

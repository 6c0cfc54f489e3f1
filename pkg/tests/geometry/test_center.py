import math
import unittest

import numpy as np

from hypolygons.geometry.center import CONE, CUSP, GEODESIC, center_kind, equidistant_level, make_center
from hypolygons.geometry.errors import GeometryError, InfeasibleSpecError
from hypolygons.geometry.lorentz import exp_so21, isometry, lorentz_dot, point_distance, vector
class test_center_kind(unittest.TestCase):

    def test_valid(self):

        self.assertEqual('cusp', str(center_kind('cusp')))
        self.assertEqual(CONE, center_kind('Cone', 1.0).name)
        self.assertEqual(2.0, center_kind(GEODESIC, 2).parameter)

    def test_invalid(self):

        for (name, parameter) in [('disc', None), (CUSP, 1.0), (CONE, None), (CONE, 0.0), (CONE, 2 * math.pi),
                                  (GEODESIC, 0.0), (GEODESIC, -1.0), (GEODESIC, math.inf)]:
            with self.assertRaises(InfeasibleSpecError, msg='%s %s' % (name, parameter)):
                center_kind(name, parameter)
class test_center_frame(unittest.TestCase):

    def test_cusp_frame(self):

        cf = make_center(CUSP)

        np.testing.assert_allclose(vector(1, 1, 0), cf.x0)
        np.testing.assert_allclose(vector(0, 0, 1), cf.e0)
        self.assertEqual(-1.0, lorentz_dot(cf.x0, cf.p0))
        # the holonomy fixes the ideal point and moves p0 toward -x2
        np.testing.assert_allclose(cf.x0, cf.gamma @ cf.x0, atol=1e-14)
        self.assertLess((cf.gamma @ cf.p0)[2], 0)

    def test_cone_half_turn(self):

        cf = make_center(CONE, math.pi)

        self.assertLess((cf.gamma @ cf.gamma).distance(isometry.identity()), 1e-10)

    def test_geodesic_translation(self):

        cf = make_center(GEODESIC, 2.0)

        self.assertAlmostEqual(2.0, point_distance(cf.p0, cf.gamma @ cf.p0), places=9)
        self.assertLess((cf.gamma @ cf.p0)[2], 0)

    def test_base_point(self):

        for kind in [(CUSP, None), (CONE, 1.0)]:
            cf = make_center(*kind)
            np.testing.assert_allclose(cf.p0, cf.base_point(0.0))

        cone = make_center(CONE, 1.0)
        self.assertAlmostEqual(0.8, point_distance(cone.x0, cone.base_point(0.8)), places=12)

        cusp = make_center(CUSP)
        for l0 in [-1.5, 0.0, 2.0]:
            self.assertAlmostEqual(-math.exp(l0), lorentz_dot(cusp.x0, cusp.base_point(l0)), places=10)

        geodesic = make_center(GEODESIC, 1.0)
        self.assertAlmostEqual(-math.sinh(0.7), lorentz_dot(geodesic.x0, geodesic.base_point(0.7)), places=12)

    def test_chart_interval(self):

        self.assertTrue(make_center(CONE, 1.0).contains_l0(0.0))
        self.assertFalse(make_center(CONE, 1.0).contains_l0(-0.1))
        self.assertFalse(make_center(GEODESIC, 1.0).contains_l0(0.0))
        self.assertTrue(make_center(CUSP).contains_l0(-5.0))
        self.assertFalse(make_center(CUSP).contains_l0(math.nan))
        with self.assertRaises(GeometryError):
            make_center(GEODESIC, 1.0).base_point(-1.0)

    def test_centralizer_commutes(self):

        for kind in [(CUSP, None), (CONE, 2.0), (GEODESIC, 1.5)]:
            cf = make_center(*kind)
            shift = cf.centralizer(0.37)
            self.assertLess((shift @ cf.gamma).distance(cf.gamma @ shift), 1e-12)

    def test_centralizer_shift(self):

        # a point moved off the chart ray is brought back to it
        for kind in [(CUSP, None), (CONE, 2.0), (GEODESIC, 1.5)]:
            cf = make_center(*kind)
            point = cf.base_point(1.3)
            for s in [-0.6, 0.45]:
                moved = cf.centralizer(s) @ point
                back = cf.centralizer(cf.centralizer_shift(moved)) @ moved
                np.testing.assert_allclose(point, back, atol=1e-10)
                self.assertAlmostEqual(1.3, cf.chart_coordinate(back), places=10)
class test_equidistants(unittest.TestCase):

    def test_cusp_tangent_line(self):

        cf = make_center(CUSP)

        self.assertEqual([-1.0], cf.equidistant_values([vector(0, -1, 0)]))

    def test_cone_lines(self):

        cf = make_center(CONE, 1.0)
        d = 0.9
        line = vector(math.sinh(d), math.cosh(d), 0)

        self.assertEqual(0.0, cf.equidistant_values([vector(0, 0, 1)])[0])
        self.assertAlmostEqual(-math.sinh(d), cf.equidistant_values([line])[0], places=12)

    def test_spread(self):

        # lines turned about the centre stay tangent to one circle
        cf = make_center(CONE, 1.0)
        line = vector(math.sinh(0.9), math.cosh(0.9), 0)
        lines = [exp_so21(cf.x0, angle) @ line for angle in [0.0, 1.1, 2.9, 4.0]]

        self.assertLess(cf.tangency_spread(lines), 1e-10)
        self.assertGreater(cf.tangency_spread([line, -line]), 1.0)
        with self.assertRaises(ValueError):
            cf.tangency_spread([])

    def test_foot_point(self):

        cf = make_center(CONE, 1.0)
        line = vector(math.sinh(0.9), math.cosh(0.9), 0)
        foot = cf.foot_point(line)

        self.assertAlmostEqual(0.0, lorentz_dot(foot, line), places=12)
        self.assertAlmostEqual(0.9, point_distance(foot, cf.x0), places=12)

    def test_levels(self):

        self.assertAlmostEqual(0.7, equidistant_level.from_size(CONE, 0.7).size, places=12)
        self.assertAlmostEqual(0.7, equidistant_level.from_size(GEODESIC, 0.7).size, places=12)
        self.assertEqual(0.7, equidistant_level.from_size(CUSP, 0.7).size)
        self.assertAlmostEqual(-math.cosh(0.7), equidistant_level.from_size(CONE, 0.7).curve_value(), places=12)

        for (kind, value) in [(CONE, 0.1), (GEODESIC, -1.0), (CUSP, 0.0), ('disc', -1.0)]:
            with self.assertRaises(GeometryError, msg=kind):
                equidistant_level(kind, value)

    def test_equidistant_contains(self):

        cf = make_center(CONE, 1.0)
        level = equidistant_level.from_size(CONE, 0.9)

        self.assertTrue(cf.equidistant_contains(level, cf.foot_point(vector(math.sinh(0.9), math.cosh(0.9), 0))))
        self.assertFalse(cf.equidistant_contains(level, cf.p0))

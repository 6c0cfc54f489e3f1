import math
import unittest

import numpy as np

from hypolygons.construction.spine import (
    euler_characteristic, per_end_minimum, spine_edge_count, spine_lower_bound, surface_type
)
from hypolygons.geometry.center import CONE, CUSP, GEODESIC
from hypolygons.geometry.errors import InfeasibleSpecError, SurfaceTypeError
class test_surface_type(unittest.TestCase):

    def test_valid(self):

        st = surface_type(2, 1)

        self.assertEqual(2, st.genus)
        self.assertEqual(1, st.punctures)
        self.assertEqual('g=2 p=1', str(st))
        self.assertEqual(-3, euler_characteristic(st))

    def test_invalid(self):

        for (genus, punctures) in [(0, 2), (0, 1), (-1, 1), (1, 0), (1.5, 1), (True, 1), (1, 'x'), (None, 1)]:
            with self.assertRaises(SurfaceTypeError, msg='%r %r' % (genus, punctures)):
                surface_type(genus, punctures)
class test_spine_bound(unittest.TestCase):

    def test_edge_counts(self):

        self.assertEqual(3, spine_edge_count(surface_type(1, 1)))
        self.assertEqual(3, spine_edge_count(surface_type(0, 3)))
        self.assertEqual(9, spine_edge_count(surface_type(2, 1)))
        self.assertEqual(12, spine_edge_count(surface_type(1, 4)))

    def test_bounds(self):

        self.assertAlmostEqual(3 * math.log(3), spine_lower_bound(surface_type(1, 1)), places=14)
        self.assertAlmostEqual(3 * math.log(3), spine_lower_bound(surface_type(0, 3)), places=14)
        self.assertAlmostEqual(9 * math.log(3), spine_lower_bound(surface_type(2, 1)), places=14)
        self.assertEqual('3.295836866', '%.9f' % spine_lower_bound(surface_type(1, 1)))
        self.assertEqual('9.887510598', '%.9f' % spine_lower_bound(surface_type(2, 1)))
class test_per_end_minimum(unittest.TestCase):

    def test_cusp(self):

        for n in range(1, 7):
            self.assertAlmostEqual(n * math.log(3), per_end_minimum(n, CUSP), places=12)

    def test_geodesic_above_cusp(self):

        for length in np.linspace(0.1, 5.0, 10):
            self.assertGreater(per_end_minimum(3, GEODESIC, length), 3 * math.log(3))

    def test_cone_below_cusp(self):

        for angle in np.linspace(0.1, 2.5, 10):
            self.assertLess(per_end_minimum(3, CONE, angle), 3 * math.log(3))

    def test_geodesic_grows_with_length(self):

        values = [per_end_minimum(4, GEODESIC, length) for length in [0.5, 1.0, 2.0, 4.0]]

        self.assertTrue(all(a < b for (a, b) in zip(values, values[1:])))

    def test_cone_too_wide(self):

        # 3 angles of 2pi/3 leave room for a cone angle below pi only
        with self.assertRaises(InfeasibleSpecError):
            per_end_minimum(3, CONE, 3.5)

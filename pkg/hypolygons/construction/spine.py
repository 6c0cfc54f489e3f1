""" Lower bounds for the total length of a spine of a punctured surface.

A minimal spine is a trivalent geodesic graph with all angles 2pi/3, and
cutting the surface along it leaves one polygon around every puncture.  Each
of those polygons is at least as long as the optimal one around a cusp, and
every edge of the graph is counted twice along the polygons.
"""

import math

from ..geometry.center import CUSP, make_center
from ..geometry.errors import SurfaceTypeError
from ..geometry.polygon_space import angle_spec
from .optimal import construct_optimal

# the angle of a minimal spine at every vertex
SPINE_ANGLE = 2 * math.pi / 3
class surface_type(object):
    """ st = surface_type(genus, punctures)

    A surface of genus g >= 0 with p >= 1 punctures, and p >= 3 when g = 0.
    """

    def __init__(self, genus, punctures):

        if isinstance(genus, bool) or isinstance(punctures, bool):
            raise SurfaceTypeError('Genus and punctures must be integers')
        try:
            (genus_value, punctures_value) = (int(genus), int(punctures))
        except (TypeError, ValueError):
            raise SurfaceTypeError('Genus and punctures must be integers')
        if genus_value != genus or punctures_value != punctures:
            raise SurfaceTypeError('Genus and punctures must be integers')

        if genus_value < 0:
            raise SurfaceTypeError('Genus must be >= 0, got %d' % genus_value)
        if punctures_value < 1:
            raise SurfaceTypeError('A surface needs at least one puncture, got %d' % punctures_value)
        if genus_value == 0 and punctures_value < 3:
            raise SurfaceTypeError('A sphere needs at least 3 punctures, got %d' % punctures_value)

        self._genus = genus_value
        self._punctures = punctures_value

    @property
    def genus(self):

        return self._genus

    @property
    def punctures(self):

        return self._punctures

    def __str__(self):

        return 'g=%d p=%d' % (self._genus, self._punctures)
def euler_characteristic(st):

    return 2 - 2 * st.genus - st.punctures
def spine_edge_count(st):
    """ spine_edge_count(st)

    Number of edges of a trivalent spine: -3 chi = 3(2g + p - 2).

    :param st: The surface
    :type st: surface_type
    :returns: The edge count
    :rtype: int
    """
    return -3 * euler_characteristic(st)
def spine_lower_bound(st):
    """ spine_lower_bound(st)

    3(2g + p - 2) log 3, the length of a spine made of edges of length log 3.
    """
    return spine_edge_count(st) * math.log(3)
def per_end_minimum(n, kind, parameter=None, tolerances=None):
    """ per_end_minimum(n, kind, parameter=None)

    Length of the shortest polygon with n angles 2pi/3 around a centre of
    the given kind.  Around a cusp this is n log 3; around a cone point or a
    geodesic it is the perimeter of the optimal polygon.

    :param n: Number of edges
    :param kind: cusp, cone or geodesic
    :param parameter: Cone angle or geodesic length
    :returns: The length
    :rtype: float
    :raises InfeasibleSpecError: for a cone whose angle leaves no room for n angles 2pi/3
    """
    n = int(n)
    spec = angle_spec([SPINE_ANGLE] * n)
    cf = make_center(kind, parameter)
    if cf.name == CUSP:
        return n * math.log(3)
    spec.check_feasible(cf)
    return construct_optimal(cf, spec, tolerances)[0].perimeter

""" The distinguished object a polygon goes around: a cusp, a cone point or a
closed geodesic, in canonical coordinates of the hyperboloid.

All three kinds share the base line e0 = (0,0,1), the base point
p0 = (1,0,0) and the geodesic g(t) = (cosh t, -sinh t, 0) running along e0
with g(0) = p0.  The centre is represented by x0, fixed by the holonomy
gamma = exp_so21(x0, s):

========  =============  ==================  ===================
kind      x0             <x0, g(t)>          gamma
========  =============  ==================  ===================
cone      (1, 0, 0)      -cosh t             rotation by alpha
geodesic  (0, 1, 0)      -sinh t             translation by r
cusp      (1, 1, 0)      -exp(t)             parabolic, s = 1
========  =============  ==================  ===================
"""

import math

import numpy as np

from .errors import InfeasibleSpecError, GeometryError
from .lorentz import vector, lorentz_dot, exp_so21, point_distance, normalize_point

CUSP = 'cusp'
CONE = 'cone'
GEODESIC = 'geodesic'

KINDS = (CUSP, CONE, GEODESIC)

# holonomy parameter of the canonical cusp
CUSP_HOLONOMY = 1.0
class center_kind(object):

    _name = ''
    _parameter = None

    def __init__(self, name, parameter=None):

        name = name.lower() if isinstance(name, str) else name
        if name not in KINDS:
            raise InfeasibleSpecError('Unknown centre kind %s: expected one of %s' % (name, ', '.join(KINDS)))

        if name == CUSP:
            if parameter is not None:
                raise InfeasibleSpecError('A cusp takes no parameter')
        else:
            if parameter is None:
                raise InfeasibleSpecError('A %s needs a parameter' % name)
            parameter = float(parameter)
            if not math.isfinite(parameter):
                raise InfeasibleSpecError('The %s parameter must be finite' % name)
            if name == CONE and not 0 < parameter < 2 * math.pi:
                raise InfeasibleSpecError('Cone angle %.17g is outside (0, 2pi)' % parameter)
            if name == GEODESIC and not parameter > 0:
                raise InfeasibleSpecError('Geodesic length %.17g must be positive' % parameter)

        self._name = name
        self._parameter = parameter

    @property
    def name(self):
        """ Public getter.  Returns cusp, cone or geodesic.

        :returns: The kind
        :rtype: string
        """

        return self._name

    @property
    def parameter(self):
        """ Public getter.  Returns the cone angle, the geodesic length, or None for a cusp.

        :returns: The parameter
        :rtype: float|None
        """

        return self._parameter

    def __str__(self):

        if self._parameter is None:
            return self._name
        return '%s:%r' % (self._name, self._parameter)

    def __eq__(self, other):

        return isinstance(other, center_kind) and (self._name, self._parameter) == (other._name, other._parameter)
class equidistant_level(object):
    """ level = equidistant_level(kind, value)

    The common value c = <e_i, x0> of lines tangent to one equidistant curve
    with x0 on their inner side.  By kind:

    ========  ===========  =======================================
    kind      c            curve
    ========  ===========  =======================================
    cone      -sinh(rho)   circle of radius rho about x0
    geodesic  -cosh(delta) equidistant at distance delta from x0
    cusp      -mu          horocycle {y : <y, x0> = -mu}
    ========  ===========  =======================================
    """

    def __init__(self, kind, value):

        kind = kind.name if isinstance(kind, center_kind) else kind
        value = float(value)
        if kind == CONE and not value <= 0:
            raise GeometryError('A cone level must be <= 0, got %.17g' % value)
        if kind == GEODESIC and not value < -1:
            raise GeometryError('A geodesic level must be < -1, got %.17g' % value)
        if kind == CUSP and not value < 0:
            raise GeometryError('A cusp level must be < 0, got %.17g' % value)
        if kind not in KINDS:
            raise GeometryError('Unknown centre kind %s' % kind)

        self._kind = kind
        self._value = value

    @classmethod
    def from_size(cls, kind, size):
        """ Builds a level from the natural size of the curve: radius, distance or horocycle scale. """

        kind = kind.name if isinstance(kind, center_kind) else kind
        if kind == CONE:
            return cls(kind, -math.sinh(size))
        if kind == GEODESIC:
            return cls(kind, -math.cosh(size))
        return cls(kind, -size)

    @property
    def kind(self):

        return self._kind

    @property
    def value(self):

        return self._value

    @property
    def size(self):
        """ Public getter.  Returns the radius (cone), the distance to the axis (geodesic) or mu (cusp).

        :returns: The size of the equidistant
        :rtype: float
        """

        if self._kind == CONE:
            return math.asinh(-self._value)
        if self._kind == GEODESIC:
            return math.acosh(-self._value)
        return -self._value

    def curve_value(self):
        """ The value of <y, x0> along the equidistant itself. """

        size = self.size
        if self._kind == CONE:
            return -math.cosh(size)
        if self._kind == GEODESIC:
            return -math.sinh(size)
        return -size
class center_frame(object):
    """ cf = center_frame(kind)

    Canonical frame of a centre: x0, e0, p0 and the holonomy gamma.  Use
    make_center() to build one.
    """

    def __init__(self, kind):

        self._kind = kind
        self._e0 = vector(0.0, 0.0, 1.0)
        self._p0 = vector(1.0, 0.0, 0.0)

        if kind.name == CONE:
            self._x0 = vector(1.0, 0.0, 0.0)
            self._holonomy = kind.parameter
        elif kind.name == GEODESIC:
            self._x0 = vector(0.0, 1.0, 0.0)
            self._holonomy = kind.parameter
        else:
            self._x0 = vector(1.0, 1.0, 0.0)
            self._holonomy = CUSP_HOLONOMY

        self._gamma = exp_so21(self._x0, self._holonomy)

    @property
    def kind(self):
        """ Public getter.  Returns the centre kind.

        :returns: The kind
        :rtype: center_kind
        """

        return self._kind

    @property
    def name(self):

        return self._kind.name

    @property
    def x0(self):

        return self._x0.copy()

    @property
    def e0(self):

        return self._e0.copy()

    @property
    def p0(self):

        return self._p0.copy()

    @property
    def gamma(self):
        """ Public getter.  Returns the holonomy, exp_so21(x0, holonomy).

        :returns: The holonomy
        :rtype: isometry
        """

        return self._gamma

    @property
    def holonomy(self):
        """ Public getter.  Returns s with gamma = exp_so21(x0, s).

        :returns: alpha, r or the canonical cusp parameter
        :rtype: float
        """

        return self._holonomy

    def contains_l0(self, l0):
        """ Whether l0 lies in the chart interval: [0, inf) cone, (0, inf) geodesic, all reals cusp. """

        if not math.isfinite(l0):
            return False
        if self.name == CONE:
            return l0 >= 0
        if self.name == GEODESIC:
            return l0 > 0
        return True

    def check_l0(self, l0):

        if not self.contains_l0(l0):
            raise GeometryError('l0 = %.17g is outside the chart interval of a %s' % (l0, self.name))

    def base_point(self, l0):
        """ cf.base_point(l0)

        The point g(l0) on the base line e0.

        :param l0: Position along the base line
        :type l0: float
        :returns: The point q0
        :rtype: numpy.ndarray
        """
        self.check_l0(l0)
        return vector(math.cosh(l0), -math.sinh(l0), 0.0)

    def base_velocity(self, l0):

        return vector(math.sinh(l0), -math.cosh(l0), 0.0)

    def centralizer(self, s):
        """ The isometry exp_so21(x0, s), which commutes with gamma. """

        return exp_so21(self._x0, s)

    def centralizer_shift(self, point):
        """ cf.centralizer_shift(point)

        Returns s such that centralizer(s) moves the point onto the ray of the
        base line used by the chart (x2 = 0, on the polygon side of x0).
        """
        w = np.asarray(point, dtype=float)
        if self.name == CONE:
            if math.hypot(w[1], w[2]) == 0.0:
                return 0.0
            return math.pi - math.atan2(w[2], w[1])
        if self.name == GEODESIC:
            return math.atanh(w[2] / w[0])
        return w[2] / (w[0] - w[1])

    def chart_coordinate(self, point):
        """ cf.chart_coordinate(point)

        Returns l0 with g(l0) = point, for a point on the chart ray.
        """
        product = lorentz_dot(point, self._x0)
        if self.name == CONE:
            return point_distance(point, self._x0)
        if self.name == GEODESIC:
            return math.asinh(-product)
        if not product < 0:
            raise GeometryError('Point is not on the chart ray of the cusp')
        return math.log(-product)

    def foot_point(self, line):
        """ cf.foot_point(line)

        The point of the line closest to the centre, which is where an
        equidistant tangent to the line touches it.
        """
        line = np.asarray(line, dtype=float)
        return normalize_point(self._x0 - lorentz_dot(self._x0, line) * line)

    def equidistant_values(self, lines):
        """ cf.equidistant_values(lines)

        Returns <e_i, x0> for each line.  Lines tangent to a single equidistant
        with x0 on their inner side share the same value.

        :param lines: Normalized oriented lines
        :type lines: list
        :returns: One value per line
        :rtype: list
        """
        return [lorentz_dot(line, self._x0) for line in lines]

    def tangency_spread(self, lines):
        """ cf.tangency_spread(lines)

        max - min of equidistant_values; zero exactly when one equidistant is
        tangent to every line.
        """
        values = self.equidistant_values(lines)
        if not values:
            raise ValueError('tangency_spread needs at least one line')
        return max(values) - min(values)

    def equidistant_contains(self, level, point, tol=1e-9):

        return abs(lorentz_dot(point, self._x0) - level.curve_value()) <= tol
def make_center(kind, parameter=None):
    """ make_center(kind, parameter=None)

    Builds the canonical frame of a centre.  ``kind`` is a center_kind or one
    of 'cusp', 'cone', 'geodesic' together with the cone angle or the geodesic
    length.

    :returns: The frame
    :rtype: center_frame
    """
    if not isinstance(kind, center_kind):
        kind = center_kind(kind, parameter)
    return center_frame(kind)

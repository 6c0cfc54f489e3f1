""" Chart of the space of polygons around a centre.

A polygon is described by (l0, theta, l1, ..., ln): it starts at the point
g(l0) of the base line, heading theta clockwise from the direction of g, and
then alternates a forward move of length l_i with a left turn by the exterior
angle pi - beta_i.  It is closed when the frame reached at the end is the
holonomy image of the starting frame.
"""

import logging
import math

import numpy as np

from .center import CONE, GEODESIC
from .errors import ClosureError, GeometryError, InfeasibleSpecError, RankDeficiencyError
from .lorentz import (
    boxtimes, exp_so21, log_so21, lorentz_dot, normalize_point, point_distance, tangent_toward, vee
)

log = logging.getLogger(__name__)
class angle_spec(object):
    """ spec = angle_spec(beta)

    The interior angles beta_1..beta_n of a polygon, each in (0, pi).
    """

    def __init__(self, beta):

        try:
            beta = [float(b) for b in beta]
        except TypeError:
            raise InfeasibleSpecError('Angles must be given as a list of numbers')

        if not beta:
            raise InfeasibleSpecError('At least one angle is required')

        errors = []
        for (index, b) in enumerate(beta):
            if not math.isfinite(b) or not 0 < b < math.pi:
                errors.append('angle %d is %.17g, outside (0, pi)' % (index + 1, b))
        if errors:
            raise InfeasibleSpecError('Invalid angles: %s' % '; '.join(errors))

        self._beta = beta

    @property
    def beta(self):
        """ Public getter.  Returns the angles as a list of floats.

        :returns: The interior angles
        :rtype: list
        """

        return list(self._beta)

    @property
    def n(self):

        return len(self._beta)

    @property
    def exterior_sum(self):

        return sum(math.pi - b for b in self._beta)

    def check_feasible(self, cf):
        """ spec.check_feasible(cf)

        A cone of angle alpha admits polygons only when alpha + sum(beta) < n pi.
        """
        if cf.name == CONE and not cf.kind.parameter + sum(self._beta) < self.n * math.pi:
            raise InfeasibleSpecError(
                'Cone angle %.17g plus the angle sum %.17g is not below %d pi' %
                (cf.kind.parameter, sum(self._beta), self.n)
            )
class polygon_params(object):
    """ params = polygon_params(l0, theta, lengths)

    Chart coordinates of a polygon.  theta is kept in [0, 2pi).
    """

    def __init__(self, l0, theta, lengths):

        self._l0 = float(l0)
        self._theta = float(theta) % (2 * math.pi)
        self._lengths = np.array(lengths, dtype=float).reshape(-1)

    @classmethod
    def from_vector(cls, x):

        x = np.asarray(x, dtype=float)
        return cls(x[0], x[1], x[2:])

    def as_vector(self):

        return np.concatenate([[self._l0, self._theta], self._lengths])

    @property
    def l0(self):

        return self._l0

    @property
    def theta(self):

        return self._theta

    @property
    def lengths(self):
        """ Public getter.  Returns a copy of the edge lengths.

        :returns: l1..ln
        :rtype: numpy.ndarray
        """

        return self._lengths.copy()

    @property
    def n(self):

        return len(self._lengths)

    @property
    def perimeter(self):

        return float(np.sum(self._lengths))

    def __repr__(self):

        return 'polygon_params(l0=%r, theta=%r, lengths=%r)' % (self._l0, self._theta, self._lengths.tolist())
class polygon(object):
    """ poly = polygon(params, vertices, edge_lines, end_vertex, start_frame, end_frame, residual)

    A developed polygon in the universal cover.  vertices[0] is q0 and edge i
    runs from vertices[i-1] to vertices[i], the last one ending at end_vertex,
    the holonomy image of q0.
    """

    def __init__(self, params, vertices, edge_lines, end_vertex, start_frame, end_frame, residual):

        self._params = params
        self._vertices = np.array(vertices, dtype=float)
        self._edge_lines = np.array(edge_lines, dtype=float)
        self._end_vertex = np.array(end_vertex, dtype=float)
        self._start_frame = start_frame
        self._end_frame = end_frame
        self._residual = float(residual)

    @property
    def params(self):

        return self._params

    @property
    def vertices(self):
        """ Public getter.  Returns the n vertices as an (n, 3) array.

        :returns: Vertices, q0 first
        :rtype: numpy.ndarray
        """

        return self._vertices.copy()

    @property
    def edge_lines(self):
        """ Public getter.  Returns the outward normals e_1..e_n as an (n, 3) array.

        :returns: Edge lines
        :rtype: numpy.ndarray
        """

        return self._edge_lines.copy()

    @property
    def end_vertex(self):

        return self._end_vertex.copy()

    @property
    def start_frame(self):

        return self._start_frame

    @property
    def end_frame(self):

        return self._end_frame

    @property
    def residual(self):

        return self._residual

    @property
    def perimeter(self):

        return self._params.perimeter

    @property
    def n(self):

        return len(self._vertices)

    def path_vertices(self):
        """ Vertices followed by the end vertex: the closed path in the cover. """

        return np.vstack([self._vertices, self._end_vertex])
class membership_report(object):
    """ report = membership_report()

    Outcome of validate_membership.  Each failed check is listed in
    ``violations`` under its name with the offending indices (1 based edge
    numbers, 0 for the starting point) and described in ``errors``.

    ==================  ==========================================  ========
    check               meaning                                     boundary
    ==================  ==========================================  ========
    center_side         x0 strictly inside every edge half-plane    no
    center_on_edge      x0 on an edge line                          yes
    left_turns          each next vertex strictly inside the edge   no
    positive_lengths    every edge has positive length              yes
    center_vertex       cone vertex at the centre (l0 = 0)          yes
    ==================  ==========================================  ========

    Configurations whose only violations are boundary ones lie in the closure
    of the polygon space.  Left turn failures caused solely by zero length
    edges are recorded as boundary too.
    """

    boundary_checks = ('center_on_edge', 'positive_lengths', 'center_vertex')

    def __init__(self):

        self._violations = {}
        self._errors = []
        self._values = []

    def add(self, check, index, message):

        self._violations.setdefault(check, []).append(index)
        self._errors.append(message)

    @property
    def violations(self):

        return {key: list(value) for (key, value) in self._violations.items()}

    @property
    def errors(self):
        """ Public getter.  Returns the list of problems found.

        :returns: Human readable problems
        :rtype: list
        """

        return list(self._errors)

    @property
    def passed(self):

        return not self._errors

    @property
    def boundary(self):
        """ Public getter.  True when the polygon fails only boundary checks.

        :returns: Whether the configuration lies in the closure but not the interior
        :rtype: bool
        """

        if self.passed:
            return False
        return all(check in self.boundary_checks for check in self._violations)
class polygon_space(object):
    """ space = polygon_space(cf, spec)

    Developing maps, closure residual and Jacobian for polygons with angles
    ``spec`` around the centre ``cf``.
    """

    def __init__(self, cf, spec, tolerances=None):

        spec.check_feasible(cf)

        self._cf = cf
        self._spec = spec
        self._tolerances = tolerances if tolerances is not None else {}
        self._turns = [exp_so21(cf.p0, math.pi - b) for b in spec.beta]

    @property
    def cf(self):

        return self._cf

    @property
    def spec(self):

        return self._spec

    @property
    def n(self):

        return self._spec.n

    def tolerance(self, name, default):

        return self._tolerances.get(name, default)

    def forward(self, length):
        """ Body frame motion along the heading by ``length``. """

        return exp_so21(self._cf.e0, -length)

    def map_v(self, l0, theta):
        """ space.map_v(l0, theta)

        The starting frame: at g(l0), heading along g rotated clockwise by theta.

        :returns: The frame
        :rtype: isometry
        """
        self._cf.check_l0(l0)
        return self._start_frame(l0, theta)

    def map_w(self, params):
        """ space.map_w(params)

        The frame reached after the n edges and their n left turns.

        :returns: The frame
        :rtype: isometry
        """
        self._check_params(params)
        return self._frames(params.as_vector())[-1]

    def closure_residual(self, params):
        """ space.closure_residual(params)

        Logarithm coordinates of gamma v w^-1, which vanish exactly when w = gamma v.

        :returns: A 3-vector
        :rtype: numpy.ndarray
        """
        self._check_params(params)
        return self.residual_vector(params.as_vector())

    def jacobian_M(self, params):
        """ space.jacobian_M(params)

        Columns (1-gamma)e0, (1-gamma)q0, e_1, ..., e_n: the derivative of the
        closure residual with respect to (l0, theta, l_1, ..., l_n) on closed
        configurations.  Raises ClosureError away from closure and
        RankDeficiencyError when the rank drops below 3.

        :returns: A 3 x (n+2) matrix
        :rtype: numpy.ndarray
        """
        self._check_params(params)
        x = params.as_vector()
        residual = float(np.linalg.norm(self.residual_vector(x)))
        if residual > self.tolerance('residual', 1e-9):
            raise ClosureError('Jacobian requested away from closure (residual %.3g)' % residual)

        m = self.jacobian_vector(x)
        singular = np.linalg.svd(m, compute_uv=False)
        if singular[0] == 0.0 or singular[-1] < 1e-8 * singular[0]:
            raise RankDeficiencyError(
                'Jacobian has rank below 3 (singular values %s)' % ', '.join('%.3g' % s for s in singular)
            )
        return m

    def develop(self, params):
        """ space.develop(params)

        Builds the polygon of closed chart coordinates.

        :returns: The developed polygon
        :rtype: polygon
        """
        self._check_params(params)
        x = params.as_vector()
        residual = float(np.linalg.norm(self.residual_vector(x)))
        if residual > self.tolerance('residual', 1e-9):
            raise ClosureError('Chart coordinates do not close up (residual %.3g)' % residual)
        return self.develop_vector(x, residual)

    def trace_path(self, start_frame, lengths):
        """ space.trace_path(start_frame, lengths)

        Vertices of the open path drawn from an arbitrary starting frame: the
        start point followed by the end of every edge.
        """
        frame = start_frame
        points = [frame @ self._cf.p0]
        for (length, turn) in zip(lengths, self._turns):
            frame = frame @ self.forward(length) @ turn
            points.append(frame @ self._cf.p0)
        return np.array(points)

    def validate_membership(self, poly, tol=None):
        """ space.validate_membership(poly)

        Checks that the polygon separates the centre from the other end with
        the centre on the convex side of every angle.

        :returns: The diagnostics
        :rtype: membership_report
        """
        if tol is None:
            tol = self.tolerance('class', 1e-9)
        cf = self._cf
        report = membership_report()
        lines = poly.edge_lines
        path = poly.path_vertices()
        lengths = poly.params.lengths
        n = poly.n
        x0 = cf.x0
        bound = -1.0 if cf.name == GEODESIC else 0.0

        for (index, line) in enumerate(lines):
            value = lorentz_dot(line, x0)
            if abs(value - bound) <= tol:
                report.add('center_on_edge', index + 1, 'centre lies on the line of edge %d' % (index + 1))
            elif value > bound:
                report.add('center_side', index + 1, 'centre is outside the half-plane of edge %d' % (index + 1))

        # the vertex after edge i is the end of edge i+1, wrapping through gamma
        following = list(path[2:]) + [cf.gamma @ path[1]]
        for index in range(n):
            if lorentz_dot(following[index], lines[index]) < -tol:
                continue
            # a zero length edge is reported on its own
            if lengths[(index + 1) % n] <= tol:
                continue
            report.add('left_turns', index + 1, 'path does not turn left after edge %d' % (index + 1))

        for (index, length) in enumerate(lengths):
            if not length > tol:
                report.add('positive_lengths', index + 1, 'edge %d has length %.3g' % (index + 1, length))

        if cf.name == CONE and poly.params.l0 <= tol:
            report.add('center_vertex', 0, 'the starting vertex sits on the cone point')

        return report

    def enclosed_area(self, poly):
        """ space.enclosed_area(poly)

        Area between the polygon and the centre, summed edge by edge over the
        region cut out by the two segments toward the centre (triangles with
        an apex at a cone point or at the cusp, quadrilaterals with two right
        angles on a geodesic).
        """
        cf = self._cf
        x0 = cf.x0
        path = poly.path_vertices()
        area = 0.0
        for index in range(poly.n):
            start = path[index]
            end = path[index + 1]
            if point_distance(start, end) <= 1e-14:
                continue
            corner_start = _angle(tangent_toward(start, end), tangent_toward(start, x0))
            corner_end = _angle(tangent_toward(end, start), tangent_toward(end, x0))
            apex = 0.0
            if cf.name == CONE:
                apex = _angle(tangent_toward(x0, start), tangent_toward(x0, end))
            area += math.pi - corner_start - corner_end - apex
        return area

    def gauss_bonnet_area(self):
        """ Area enclosed between any polygon of the space and its centre. """

        area = self._spec.exterior_sum
        if self._cf.name == CONE:
            area -= self._cf.kind.parameter
        return area

    def residual_vector(self, x):

        frames = self._frames(x)
        error = self._cf.gamma @ frames[0] @ frames[-1].inverse()
        return log_so21(error)

    def jacobian_vector(self, x):

        frames = self._frames(x)
        cf = self._cf
        gamma = cf.gamma.matrix
        ones = np.eye(3)
        q0 = frames[0] @ cf.p0
        columns = [(ones - gamma) @ cf.e0, (ones - gamma) @ q0]
        for frame in frames[:-1]:
            columns.append(frame @ cf.e0)
        return np.column_stack(columns)

    def develop_vector(self, x, residual=0.0):

        frames = self._frames(x)
        cf = self._cf
        vertices = [frame @ cf.p0 for frame in frames[:-1]]
        lines = [frame @ cf.e0 for frame in frames[:-1]]
        end_vertex = frames[-1] @ cf.p0
        return polygon(
            polygon_params.from_vector(x),
            [normalize_point(v) for v in vertices],
            lines,
            normalize_point(end_vertex),
            frames[0],
            frames[-1],
            residual,
        )

    def line_sensitivity(self, x):
        """ space.line_sensitivity(x)

        Derivative of <e_i, x0> with respect to the chart coordinates, one row
        per edge.  Moving a coordinate moves e_i by xi⊠e_i, where xi is -e0
        for l0, -q0 for theta and -e_k for every earlier edge k.
        """
        frames = self._frames(x)
        cf = self._cf
        x0 = cf.x0
        q0 = frames[0] @ cf.p0
        lines = [frame @ cf.e0 for frame in frames[:-1]]
        n = self.n
        rows = np.zeros((n, n + 2))
        for i in range(n):
            generators = [-cf.e0, -q0] + [-lines[k] for k in range(i)]
            for (j, xi) in enumerate(generators):
                rows[i, j] = lorentz_dot(boxtimes(xi, lines[i]), x0)
        return rows

    def _start_frame(self, l0, theta):

        cf = self._cf
        return self.forward(l0) @ exp_so21(cf.p0, -theta)

    def _frames(self, x):

        frames = [self._start_frame(x[0], x[1])]
        for (length, turn) in zip(x[2:], self._turns):
            frames.append(frames[-1] @ self.forward(length) @ turn)
        return frames

    def _check_params(self, params):

        if params.n != self.n:
            raise GeometryError('Expected %d edge lengths, got %d' % (self.n, params.n))
        self._cf.check_l0(params.l0)
        if np.any(params.lengths < 0) or not np.all(np.isfinite(params.lengths)):
            raise GeometryError('Edge lengths must be finite and non-negative')
def _angle(a, b):

    return math.acos(max(-1.0, min(1.0, lorentz_dot(a, b))))

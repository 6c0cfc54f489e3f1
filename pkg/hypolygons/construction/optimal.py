""" The optimal polygon around a centre, built from blocks instead of searched for.

Every vertex of the polygon with an inscribed equidistant owns a block: the
region between the two tangent points next to it, symmetric about the line
from the vertex to the centre.  The holonomy parameter a block covers (an
angle at a cone point, a length along a closed geodesic, a parabolic
displacement at a cusp) depends only on the level of the equidistant and on
the vertex angle, so the blocks fit together around the centre exactly when
their widths add up to the holonomy.
"""

import logging
import math

import numpy as np
import scipy.optimize

from ..geometry.center import CONE, CUSP, GEODESIC, center_kind, equidistant_level
from ..geometry.errors import (
    BracketError, ClosureError, GeometryError, InfeasibleBlockError, InfeasibleSpecError, NormalizationError,
    OutOfChartError, ReconstructionInfeasibleError
)
from ..geometry.lorentz import (
    SPACELIKE, TIMELIKE, J, boxtimes, classify, exp_so21, isometry, lorentz_dot, normalize_line,
    normalize_point, point_distance, tangent_toward, vee
)
from ..geometry.polygon_space import polygon_params, polygon_space

log = logging.getLogger(__name__)

# agreement required between a developed path and the holonomy it should realise
HOLONOMY_TOLERANCE = 1e-7

# Gauss-Newton on the chart start stops early below this residual
POLISH_FLOOR = 1e-13

# distance allowed between developed vertices and the line intersections they came from
DRIFT_TOLERANCE = 1e-7
def _check_beta(beta):

    beta = float(beta)
    if not math.isfinite(beta) or not 0 < beta < math.pi:
        raise InfeasibleSpecError('Angle %.17g is outside (0, pi)' % beta)
    return beta
def _kind_name(kind):

    if isinstance(kind, center_kind):
        return kind.name
    if kind not in (CONE, CUSP, GEODESIC):
        raise InfeasibleSpecError('Unknown centre kind %s' % kind)
    return kind
def _level(kind, level):

    if isinstance(level, equidistant_level):
        if level.kind != kind:
            raise GeometryError('A %s level cannot be used for a %s' % (level.kind, kind))
        return level
    return equidistant_level(kind, level)
def cusp_edge_length(beta):
    """ cusp_edge_length(beta)

    Perimeter contributed by a vertex of angle beta to a polygon with an
    inscribed horocycle: 2 asinh(cot(beta/2)), whatever the other angles are.

    :param beta: Interior angle in (0, pi)
    :type beta: float
    :returns: The length of the two half edges next to the vertex
    :rtype: float
    """
    beta = _check_beta(beta)
    return 2.0 * math.asinh(1.0 / math.tan(beta / 2.0))
def _reference_line(kind, size):
    """ The line tangent to the equidistant of the given size at its point nearest the chart ray. """

    if kind == CONE:
        return np.array([math.sinh(size), math.cosh(size), 0.0])
    if kind == GEODESIC:
        return np.array([math.sinh(size), -math.cosh(size), 0.0])
    return np.array([(size - 1.0 / size) / 2.0, -(size + 1.0 / size) / 2.0, 0.0])
def _width(kind, size, beta):

    half = math.cos(beta / 2.0)
    if kind == CONE:
        ratio = half / math.cosh(size)
        if ratio > 1.0:
            raise InfeasibleBlockError('A circle of radius %.17g cannot support an angle %.17g' % (size, beta))
        return 2.0 * math.asin(ratio)
    if kind == GEODESIC:
        return 2.0 * math.asinh(half / math.sinh(size))
    return 2.0 * half / size
def _width_derivative(kind, size, beta):

    half = math.cos(beta / 2.0)
    if kind == CONE:
        ratio = half / math.cosh(size)
        return -2.0 * ratio * math.tanh(size) / math.sqrt(1.0 - ratio * ratio)
    if kind == GEODESIC:
        ratio = half / math.sinh(size)
        return -2.0 * ratio / math.tanh(size) / math.sqrt(1.0 + ratio * ratio)
    return -2.0 * half / (size * size)
def block_width(kind, level, beta):
    """ block_width(kind, level, beta)

    The share of the holonomy taken by a block whose two edges are tangent to
    the equidistant at ``level`` and meet at the angle beta:

    ========  ====================================
    kind      width
    ========  ====================================
    cone      2 asin(cos(beta/2) / cosh(radius))
    geodesic  2 asinh(cos(beta/2) / sinh(distance))
    cusp      2 cos(beta/2) / mu
    ========  ====================================

    :param kind: cone, geodesic, cusp or a center_kind
    :param level: An equidistant_level or its value
    :param beta: The vertex angle
    :returns: The width
    :rtype: float
    """
    kind = _kind_name(kind)
    level = _level(kind, level)
    beta = _check_beta(beta)
    return _width(kind, level.size, beta)
def half_edge_length(kind, level, beta):
    """ half_edge_length(kind, level, beta)

    Distance from a vertex of angle beta to the tangent points of its two
    edges, for lines tangent to the equidistant at ``level``.
    """
    kind = _kind_name(kind)
    level = _level(kind, level)
    beta = _check_beta(beta)
    size = level.size
    cotangent = 1.0 / math.tan(beta / 2.0)
    if kind == CONE:
        return math.asinh(math.tanh(size) * cotangent)
    if kind == GEODESIC:
        half = math.cos(beta / 2.0)
        return math.atanh(math.cosh(size) * half / math.sqrt(math.sinh(size)**2 + half * half))
    return math.asinh(cotangent)
def block_level_for_width(kind, width, beta):
    """ block_level_for_width(kind, width, beta)

    Inverse of block_width: the level at which a block of angle beta has the
    given width.  Raises InfeasibleBlockError when no level fits, which for a
    cone means width >= pi - beta.
    """
    kind = _kind_name(kind)
    beta = _check_beta(beta)
    width = float(width)
    if not width > 0:
        raise InfeasibleBlockError('Block width must be positive, got %.17g' % width)

    half = math.cos(beta / 2.0)
    if kind == CONE:
        if not width < math.pi - beta:
            raise InfeasibleBlockError('A cone block of angle %.17g is narrower than %.17g' % (beta, width))
        return equidistant_level.from_size(kind, math.acosh(half / math.sin(width / 2.0)))
    if kind == GEODESIC:
        return equidistant_level.from_size(kind, math.asinh(half / math.sinh(width / 2.0)))
    return equidistant_level.from_size(kind, 2.0 * half / width)
class construction_certificate(object):
    """ certificate = construction_certificate(level, residual, tangency_spread, membership)

    What a constructed polygon was checked against.
    """

    def __init__(self, level, residual, tangency_spread, membership):

        self.level = level
        self.residual = residual
        self.tangency_spread = tangency_spread
        self.membership = membership

    @property
    def passed(self):

        return self.membership.passed
class optimal_construction(object):
    """ builder = optimal_construction(cf, spec)

    Builds the polygon with an inscribed equidistant for the centre ``cf``
    and the angles ``spec``, and recovers polygons from their edge lengths.
    """

    def __init__(self, cf, spec, tolerances=None):

        self._cf = cf
        self._spec = spec
        self._space = polygon_space(cf, spec, tolerances)

    @property
    def space(self):

        return self._space

    def solve_equidistant_level(self):
        """ builder.solve_equidistant_level()

        Finds the level whose block widths add up to the holonomy.  The sum is
        strictly decreasing in the size of the equidistant, so the root is
        bracketed and bisected, then polished with two Newton steps.  At a
        cusp the widths scale as 1/mu and the level is explicit.

        :returns: The level
        :rtype: equidistant_level
        """
        kind = self._cf.name
        beta = self._spec.beta
        target = self._cf.holonomy

        if kind == CUSP:
            mu = sum(2.0 * math.cos(b / 2.0) for b in beta) / target
            level = equidistant_level.from_size(kind, mu)
            log.info('cusp level %.17g', level.value)
            return level

        def excess(size):
            return sum(_width(kind, size, b) for b in beta) - target

        def slope(size):
            return sum(_width_derivative(kind, size, b) for b in beta)

        (lower, upper) = self._bracket(kind, excess)
        size = scipy.optimize.bisect(excess, lower, upper, xtol=1e-13 * min(1.0, upper))
        for _ in range(2):
            derivative = slope(size)
            if derivative == 0.0:
                break
            polished = size - excess(size) / derivative
            if lower < polished < upper and abs(excess(polished)) <= abs(excess(size)):
                size = polished

        level = equidistant_level.from_size(kind, size)
        log.info('%s level %.17g (size %.17g, width residual %.3g)', kind, level.value, size, excess(size))
        return level

    def _bracket(self, kind, excess):

        if kind == CONE:
            if not excess(0.0) > 0:
                raise InfeasibleSpecError('Cone angle leaves no room for the blocks')
            (lower, upper) = (0.0, 1.0)
            for _ in range(64):
                if excess(upper) < 0:
                    return (lower, upper)
                (lower, upper) = (upper, 2.0 * upper)
            raise BracketError('No cone radius found below %.17g' % upper)

        (lower, upper) = (1.0, 1.0)
        if excess(1.0) < 0:
            for _ in range(1100):
                (lower, upper) = (lower / 2.0, lower)
                if lower == 0.0:
                    break
                if excess(lower) > 0:
                    return (lower, upper)
            raise BracketError('No distance to the axis found above %.17g' % upper)

        for _ in range(64):
            (lower, upper) = (upper, 2.0 * upper)
            if excess(upper) < 0:
                return (lower, upper)
        raise BracketError('No distance to the axis found below %.17g' % upper)

    def edge_lines(self, level):
        """ builder.edge_lines(level)

        The n + 1 lines E_0, ..., E_n tangent to the equidistant, with
        E_{i+1} obtained from E_i by the centralizer of the holonomy moved by
        the i-th block width and E_0 the holonomy preimage of E_n.
        """
        cf = self._cf
        kind = cf.name
        first = _reference_line(kind, level.size)
        widths = [block_width(kind, level, b) for b in self._spec.beta]
        lines = [first]
        for width in widths[:-1]:
            lines.append(cf.centralizer(width) @ lines[-1])
        return [cf.centralizer(-widths[-1]) @ first] + lines

    def construct(self):
        """ builder.construct()

        Assembles the optimal polygon, moves its first vertex onto the chart
        ray with the centralizer of the holonomy and reads off its chart
        coordinates.

        :returns: (params, polygon, certificate)
        :rtype: tuple
        """
        level = self.solve_equidistant_level()
        (params, poly) = self._assemble(self.edge_lines(level))
        certificate = construction_certificate(
            level,
            poly.residual,
            self._cf.tangency_spread(poly.edge_lines),
            self._space.validate_membership(poly),
        )
        if not certificate.passed:
            log.warning('constructed polygon fails membership: %s', '; '.join(certificate.membership.errors))
        return (params, poly, certificate)

    def block_offset(self, size_from, size_to, beta):
        """ builder.block_offset(size_from, size_to, beta)

        Centralizer parameter s > 0 such that the line tangent to the
        equidistant of size ``size_to``, moved by s, meets the line tangent to
        the equidistant of size ``size_from`` at the angle beta.  With equal
        sizes this is the block width.
        """
        cf = self._cf
        kind = cf.name
        beta = _check_beta(beta)
        here = _reference_line(kind, size_from)
        there = _reference_line(kind, size_to)

        def excess(s):
            return lorentz_dot(here, cf.centralizer(s) @ there) + math.cos(beta)

        if kind == CONE:
            upper = math.pi
        else:
            upper = 1.0
            for _ in range(64):
                if excess(upper) < 0:
                    break
                upper *= 2.0
            else:
                raise BracketError('No offset found below %.17g' % upper)
        return scipy.optimize.brentq(excess, 0.0, upper, xtol=1e-15)

    def tangent_polygon(self, ratios):
        """ builder.tangent_polygon(ratios)

        The polygon whose k-th edge line is tangent to the equidistant of size
        t * ratios[k].  Consecutive lines are placed with block_offset and the
        common scale t is bisected until the offsets add up to the holonomy.
        Equal ratios give the optimal polygon, unequal ones any other member
        of the space.

        :param ratios: n positive numbers
        :returns: (params, polygon)
        :rtype: tuple
        :raises GeometryError: when the lines do not bound a polygon of the space
        """
        cf = self._cf
        kind = cf.name
        beta = self._spec.beta
        n = self._spec.n
        ratios = np.array(ratios, dtype=float).reshape(-1)
        if len(ratios) != n or not np.all(np.isfinite(ratios)) or np.any(ratios <= 0):
            raise GeometryError('Expected %d positive size ratios' % n)

        def offsets(scale):
            sizes = scale * ratios
            return [self.block_offset(sizes[k], sizes[(k + 1) % n], beta[k]) for k in range(n)]

        def excess(scale):
            return sum(offsets(scale)) - cf.holonomy

        (lower, upper) = self._bracket(kind, excess)
        scale = scipy.optimize.brentq(excess, lower, upper, xtol=1e-15)
        steps = offsets(scale)
        sizes = scale * ratios

        position = 0.0
        lines = [cf.centralizer(-steps[-1]) @ _reference_line(kind, sizes[-1])]
        for k in range(n):
            lines.append(cf.centralizer(position) @ _reference_line(kind, sizes[k]))
            position += steps[k]
        log.debug('%s tangent polygon at scale %.17g, offset residual %.3g', kind, scale, excess(scale))

        (params, poly) = self._assemble(lines)
        report = self._space.validate_membership(poly)
        if not report.passed:
            raise GeometryError('Tangent lines do not bound a polygon of the space: %s' % '; '.join(report.errors))
        return (params, poly)

    def _assemble(self, lines):

        cf = self._cf
        n = self._spec.n
        vertices = [normalize_point(boxtimes(lines[i], lines[i + 1])) for i in range(n)]
        vertices.append(cf.gamma @ vertices[0])
        shift = cf.centralizer(cf.centralizer_shift(vertices[0]))
        vertices = [shift @ vertex for vertex in vertices]

        l0 = cf.chart_coordinate(vertices[0])
        cf.check_l0(l0)
        theta = self._heading(l0, tangent_toward(vertices[0], vertices[1]))
        lengths = [point_distance(vertices[i], vertices[i + 1]) for i in range(n)]

        x = self._polish(polygon_params(l0, theta, lengths).as_vector())
        params = polygon_params.from_vector(x)
        poly = self._space.develop(params)
        drift = max(point_distance(a, b) for (a, b) in zip(poly.vertices, vertices))
        if drift > DRIFT_TOLERANCE:
            raise ClosureError('Developed vertices are %.3g away from the line intersections' % drift)
        return (params, poly)

    def _polish(self, x):
        """ Gauss-Newton on (l0, theta) with the lengths held fixed, using the first two columns of M. """

        cf = self._cf
        space = self._space
        x = np.array(x, dtype=float)
        try:
            rho = space.residual_vector(x)
        except OutOfChartError as e:
            raise ClosureError('Path does not close: %s' % e)
        norm = float(np.linalg.norm(rho))
        if norm > space.tolerance('search_residual', 1e-7):
            raise ClosureError('Path does not close (residual %.3g)' % norm)

        for _ in range(int(space.tolerance('newton_max_iter', 50))):
            if norm <= POLISH_FLOOR:
                break
            step = np.linalg.lstsq(space.jacobian_vector(x)[:, :2], -rho, rcond=None)[0]
            trial = x.copy()
            trial[:2] += step
            if not cf.contains_l0(trial[0]):
                break
            try:
                trial_rho = space.residual_vector(trial)
            except OutOfChartError:
                break
            trial_norm = float(np.linalg.norm(trial_rho))
            if trial_norm >= norm:
                break
            (x, rho, norm) = (trial, trial_rho, trial_norm)

        if norm > space.tolerance('residual', 1e-9):
            raise ClosureError('Path does not close (residual %.3g after polishing)' % norm)
        x[1] %= 2 * math.pi
        return x

    def _heading(self, l0, direction):

        cf = self._cf
        along = cf.base_velocity(l0)
        left = boxtimes(cf.base_point(l0), along)
        return math.atan2(-lorentz_dot(direction, left), lorentz_dot(direction, along)) % (2 * math.pi)

    def reconstruct(self, lengths):
        """ builder.reconstruct(lengths)

        Recovers the chart coordinates of the polygon with the given edge
        lengths.  The open path drawn from the reference frame ends at a frame
        W; the starting frame v of a closed polygon satisfies W = v^-1 gamma v,
        so the fixed vector of W is v^-1 x0.  Once its type and parameter are
        checked against the holonomy, v is determined up to the centralizer,
        which is then used to bring the first vertex onto the chart ray.

        :param lengths: The edge lengths l_1, ..., l_n, all positive
        :returns: The chart coordinates
        :rtype: polygon_params
        :raises ReconstructionInfeasibleError: when no polygon of the space has these lengths
        """
        cf = self._cf
        lengths = np.array(lengths, dtype=float).reshape(-1)
        if len(lengths) != self._spec.n:
            raise GeometryError('Expected %d edge lengths, got %d' % (self._spec.n, len(lengths)))
        if not np.all(np.isfinite(lengths)) or np.any(lengths <= 0):
            raise GeometryError('Edge lengths must be finite and positive')

        body = isometry.identity()
        for (length, beta) in zip(lengths, self._spec.beta):
            body = body @ self._space.forward(length) @ exp_so21(cf.p0, math.pi - beta)
        m = body.matrix
        diagnostics = {'kind': cf.name, 'trace': float(np.trace(m))}

        fixed = self._fixed_vector(m, diagnostics)
        standard = _adapted_basis(cf.name, cf.x0, cf.p0, cf.e0)
        adapt = isometry(standard @ np.linalg.inv(_adapted_basis(cf.name, fixed, cf.p0, cf.e0)))
        diagnostics['isometry'] = adapt.errors(self._space.tolerance('iso', 1e-10))
        start = cf.centralizer(cf.centralizer_shift(adapt @ cf.p0)) @ adapt

        try:
            l0 = cf.chart_coordinate(start @ cf.p0)
            cf.check_l0(l0)
            theta = self._heading(l0, start @ np.array([0.0, -1.0, 0.0]))
        except GeometryError as e:
            raise ReconstructionInfeasibleError('The polygon lies on the wrong side of the centre: %s' % e, diagnostics)

        try:
            x = self._polish(polygon_params(l0, theta, lengths).as_vector())
        except ClosureError as e:
            raise ReconstructionInfeasibleError('Reconstructed path does not close: %s' % e, diagnostics)
        residual = float(np.linalg.norm(self._space.residual_vector(x)))
        diagnostics['residual'] = residual

        params = polygon_params.from_vector(x)
        report = self._space.validate_membership(self._space.develop_vector(x, residual))
        if not report.passed:
            diagnostics['membership'] = report.errors
            raise ReconstructionInfeasibleError(
                'Reconstructed polygon is not in the polygon space: %s' % '; '.join(report.errors), diagnostics
            )
        return params

    def _fixed_vector(self, m, diagnostics):

        kind = self._cf.name
        # the J-antisymmetric part of exp(hat(u)) is a multiple of u
        skew_part = vee((m - J @ m.T @ J) / 2.0)
        trace = float(np.trace(m))

        if kind == CUSP:
            scale = max(1.0, float(np.max(np.abs(m))))
            if abs(trace - 3.0) > HOLONOMY_TOLERANCE * scale or not skew_part[0] > 0:
                raise ReconstructionInfeasibleError('No parabolic of the right direction joins the endpoints', diagnostics)
            planar = math.hypot(skew_part[1], skew_part[2])
            if abs(skew_part[0] - planar) > HOLONOMY_TOLERANCE * scale:
                raise ReconstructionInfeasibleError('The joining isometry is not parabolic', diagnostics)
            return np.array([planar, skew_part[1], skew_part[2]])

        # the fixed vector spans the kernel of m - 1
        fixed = np.linalg.svd(m - np.eye(3))[2][-1]
        try:
            expected = TIMELIKE if kind == CONE else SPACELIKE
            if classify(fixed) != expected:
                raise ReconstructionInfeasibleError('The joining isometry has the wrong type', diagnostics)
        except NormalizationError:
            raise ReconstructionInfeasibleError('The joining isometry has no fixed vector', diagnostics)

        if kind == CONE:
            fixed = normalize_point(fixed)
            angle = math.atan2(-lorentz_dot(skew_part, fixed), (trace - 1.0) / 2.0) % (2 * math.pi)
            diagnostics['rotation'] = angle
            if abs(angle - self._cf.holonomy) > HOLONOMY_TOLERANCE:
                raise ReconstructionInfeasibleError(
                    'Rotation by %.12g instead of %.12g joins the endpoints' % (angle, self._cf.holonomy), diagnostics
                )
            return fixed

        fixed = normalize_line(fixed)
        if lorentz_dot(skew_part, fixed) < 0:
            fixed = -fixed
        translation = math.asinh(lorentz_dot(skew_part, fixed))
        diagnostics['translation'] = translation
        if abs(translation - self._cf.holonomy) > HOLONOMY_TOLERANCE:
            raise ReconstructionInfeasibleError(
                'Translation by %.12g instead of %.12g joins the endpoints' % (translation, self._cf.holonomy),
                diagnostics
            )
        return fixed
def _adapted_basis(kind, fixed, p0, e0):
    """ Columns of a basis built from a fixed vector with the same Gram matrix for every fixed vector of a kind. """

    if kind == CONE:
        side = normalize_line(e0 + lorentz_dot(e0, fixed) * fixed)
        return np.column_stack([fixed, side, boxtimes(fixed, side)])
    if kind == GEODESIC:
        foot = normalize_point(p0 - lorentz_dot(p0, fixed) * fixed)
        return np.column_stack([fixed, foot, boxtimes(fixed, foot)])
    a = -lorentz_dot(p0, fixed)
    other = (2.0 / a) * p0 - fixed / (a * a)
    return np.column_stack([fixed, other, boxtimes(fixed, other) / 2.0])
def construct_optimal(cf, spec, tolerances=None):
    """ construct_optimal(cf, spec)

    :returns: (params, polygon, certificate) for the optimal polygon
    :rtype: tuple
    """
    return optimal_construction(cf, spec, tolerances).construct()
def reconstruct_from_lengths(cf, spec, lengths, tolerances=None):

    return optimal_construction(cf, spec, tolerances).reconstruct(lengths)

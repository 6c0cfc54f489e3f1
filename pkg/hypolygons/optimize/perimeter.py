""" Perimeter minimisation over the space of closed polygons around a centre.

Iterates stay on the constraint surface {closure residual = 0}: every trial
point is pulled back onto it by a Newton retraction and accepted only when it
still passes the membership checks.  Descent directions live in the null space
of the Jacobian M, and configurations stuck on the boundary of the closure of
the space (zero length edges, a cone vertex at the centre, the centre on an
edge line) are pushed back inside with a perimeter decreasing step.
"""

import logging
import math

import numpy as np
import scipy.linalg
import scipy.optimize

from ..construction.optimal import optimal_construction
from ..geometry.center import CONE, GEODESIC
from ..geometry.errors import (
    BoundaryEscapeError, ClosureError, GeometryError, OutOfChartError, ProjectionError, SamplerExhaustedError
)
from ..geometry.lorentz import J, boxtimes, lorentz_dot
from ..geometry.polygon_space import polygon_params

log = logging.getLogger(__name__)

DEFAULT_OPTIONS = {
    'residual': 1e-9,
    'search_residual': 1e-7,
    'gradient': 1e-8,
    'spread': 1e-6,
    'rank': 1e-7,
    'max_iter': 500,
    'newton_max_iter': 50,
    'newton_start': 0.5,
}

# Newton retraction stops early below this residual
NEWTON_FLOOR = 1e-13

# step for the finite difference Hessian of the projected gradient
HESSIAN_STEP = 1e-5

# a coordinate this close to its bound counts as active when the line search stalls
BOUNDARY_GAP = 1e-6

# box and margin of the boundary escape linear program
ESCAPE_BOX = 10.0
ESCAPE_MARGIN = 1e-2

# random_feasible draws log size ratios from [-spread, spread], spread drawn from
# SAMPLE_SPREAD and shrunk by SAMPLE_SHRINK after every rejected draw
SAMPLE_SPREAD = (0.3, 1.2)
SAMPLE_SHRINK = 0.75
SAMPLE_ATTEMPTS = 20
class opt_result(object):
    """ result = opt_result(params, perimeter, iterations, converged)

    Outcome of one minimisation.  Failed starts carry ``params = None`` and
    the reason in ``message``.
    """

    def __init__(
        self,
        params,
        perimeter,
        iterations,
        converged,
        tangency_spread=None,
        lagrange_z=None,
        lagrange_lambda=None,
        lagrange_deviation=None,
        residual=None,
        gradient_norm=None,
        boundary_escapes=0,
        history=None,
        message='',
    ):

        self.params = params
        self.perimeter = perimeter
        self.iterations = iterations
        self.converged = converged
        self.tangency_spread = tangency_spread
        self.lagrange_z = lagrange_z
        self.lagrange_lambda = lagrange_lambda
        self.lagrange_deviation = lagrange_deviation
        self.residual = residual
        self.gradient_norm = gradient_norm
        self.boundary_escapes = boundary_escapes
        self.history = history if history is not None else []
        self.message = message
        self.start = None
        self.seed = None

    def __repr__(self):

        return 'opt_result(perimeter=%r, converged=%r, iterations=%r)' % (
            self.perimeter, self.converged, self.iterations
        )
class certificate(object):
    """ cert = certificate(critical, singular_values, rank_ratio, values, residual)

    Criticality of a closed polygon.  Adding the perimeter gradient as a
    fourth row to M keeps the rank at 3 exactly at critical points, and there
    all edge lines share the value <e_i, x0> = -1/lambda.
    """

    def __init__(self, critical, singular_values, rank_ratio, values, residual):

        self.critical = critical
        self.singular_values = singular_values
        self.rank_ratio = rank_ratio
        self.values = values
        self.residual = residual

    @property
    def tangency_spread(self):

        return max(self.values) - min(self.values)

    @property
    def lagrange_lambda(self):

        return -1.0 / (sum(self.values) / len(self.values))
class perimeter_optimizer(object):
    """ optimizer = perimeter_optimizer(space, options=None)

    Minimises the perimeter over ``space`` (a polygon_space).  ``options``
    overrides DEFAULT_OPTIONS.
    """

    def __init__(self, space, options=None):

        self._space = space
        self._options = dict(DEFAULT_OPTIONS)
        if options:
            self._options.update({key: value for (key, value) in options.items() if key in DEFAULT_OPTIONS})

    @property
    def space(self):

        return self._space

    def option(self, name):

        return self._options[name]

    def gradient(self):
        """ Gradient of the perimeter in chart coordinates: (0, 0, 1, ..., 1). """

        return np.concatenate([[0.0, 0.0], np.ones(self._space.n)])

    def project_to_constraint(self, params):
        """ optimizer.project_to_constraint(params)

        Newton retraction onto {closure residual = 0}.  Each step solves for
        the three chart coordinates picked by a column pivoted QR of M and
        leaves the others alone.  Parameters already closed are returned
        unchanged.

        :returns: Closed chart coordinates
        :rtype: polygon_params
        :raises ProjectionError: when the start is too far off or Newton does not reach the tolerance
        """
        if params.n != self._space.n:
            raise GeometryError('Expected %d edge lengths, got %d' % (self._space.n, params.n))
        x = params.as_vector()
        projected = self._project(x)
        if projected is x:
            return params
        return polygon_params.from_vector(projected)

    def _project(self, x):

        target = self.option('residual')
        rho = self._residual(x)
        norm = float(np.linalg.norm(rho))
        if norm <= target:
            return x
        if norm > self.option('newton_start'):
            raise ProjectionError('Residual %.3g is too large to project' % norm, residual=norm)

        current = np.array(x, dtype=float)
        for _ in range(int(self.option('newton_max_iter'))):
            m = self._space.jacobian_vector(current)
            (q, r, pivots) = scipy.linalg.qr(m, pivoting=True)
            if abs(r[2, 2]) <= 1e-14 * abs(r[0, 0]):
                raise ProjectionError('Jacobian is rank deficient during projection', residual=norm)
            step = scipy.linalg.solve_triangular(r[:, :3], -(q.T @ rho))
            trial = current.copy()
            trial[pivots[:3]] += step
            try:
                trial_rho = self._residual(trial)
            except ProjectionError:
                break
            trial_norm = float(np.linalg.norm(trial_rho))
            if trial_norm >= norm:
                break
            (current, rho, norm) = (trial, trial_rho, trial_norm)
            if norm <= NEWTON_FLOOR:
                break

        if norm > target:
            raise ProjectionError('Projection stalled at residual %.3g' % norm, residual=norm)
        if not self._space.cf.contains_l0(current[0]) or np.any(current[2:] < 0):
            raise ProjectionError('Projection left the chart', residual=norm)
        current[1] %= 2 * math.pi
        return current

    def _residual(self, x):

        try:
            return self._space.residual_vector(x)
        except OutOfChartError as e:
            raise ProjectionError('Residual is outside the logarithm chart: %s' % e)

    def _retract(self, x):
        """ The projection of x when it lands inside the polygon space, None otherwise. """

        if np.any(x[2:] < 0) or not self._space.cf.contains_l0(x[0]):
            return None
        try:
            projected = self._project(x)
        except ProjectionError:
            return None
        if not self._membership(projected).passed:
            return None
        return projected

    def _membership(self, x):

        residual = float(np.linalg.norm(self._space.residual_vector(x)))
        return self._space.validate_membership(self._space.develop_vector(x, residual))

    def minimize(self, init):
        """ optimizer.minimize(init)

        Descends from ``init`` (closed up to the search tolerance) until the
        perimeter gradient projected on the tangent space vanishes.  Steps are
        reduced Newton steps from a finite difference Hessian when it is
        positive definite and projected gradient steps otherwise, with Armijo
        backtracking along the retraction.

        :returns: The result, converged or not
        :rtype: opt_result
        """
        residual = float(np.linalg.norm(self._residual(init.as_vector())))
        if residual > self.option('search_residual'):
            raise ClosureError('Starting point does not close (residual %.3g)' % residual)

        x = self._project(init.as_vector())
        escapes = 0
        report = self._membership(x)
        if not report.passed:
            if not report.boundary:
                raise GeometryError('Starting point is not in the polygon space: %s' % '; '.join(report.errors))
            x = self._escape(x)
            escapes += 1

        if self._space.n == 1:
            return self._result(x, 0, True, escapes, [self._perimeter(x)], 'the space is a single polygon')

        g = self.gradient()
        f = self._perimeter(x)
        history = [f]
        (converged, message, steps) = (False, '', 0)
        max_iter = int(self.option('max_iter'))
        while True:
            basis = scipy.linalg.null_space(self._space.jacobian_vector(x))
            reduced = basis.T @ g
            gradient_norm = float(np.linalg.norm(reduced))
            log.debug('iteration %d perimeter %.17g gradient %.3g', steps, f, gradient_norm)
            if gradient_norm <= self.option('gradient'):
                converged = True
                break
            if steps >= max_iter:
                message = 'iteration cap of %d reached' % max_iter
                break

            accepted = self._line_search(x, f, self._descent_direction(x, basis, reduced), gradient_norm)
            if accepted is None:
                if self._active_set(x, BOUNDARY_GAP):
                    try:
                        x = self._escape(x, BOUNDARY_GAP)
                    except BoundaryEscapeError as e:
                        message = 'stalled next to the boundary: %s' % e
                        break
                    escapes += 1
                    f = self._perimeter(x)
                    history.append(f)
                    steps += 1
                    continue
                message = 'line search failed'
                break

            (x, f) = accepted
            history.append(f)
            steps += 1

        if converged:
            log.info('converged after %d steps, perimeter %.17g', steps, f)
        else:
            log.info('stopped after %d steps: %s', steps, message)
        return self._result(x, steps, converged, escapes, history, message)

    def _perimeter(self, x):

        return float(np.sum(x[2:]))

    def _reduced_gradient_norm(self, x):

        basis = scipy.linalg.null_space(self._space.jacobian_vector(x))
        return float(np.linalg.norm(basis.T @ self.gradient()))

    def _projected_gradient(self, x):

        m = self._space.jacobian_vector(x)
        g = self.gradient()
        return g - m.T @ np.linalg.solve(m @ m.T, m @ g)

    def _descent_direction(self, x, basis, reduced):

        k = basis.shape[1]
        hessian = np.zeros((k, k))
        for j in range(k):
            u = basis[:, j]
            difference = self._projected_gradient(x + HESSIAN_STEP * u) - self._projected_gradient(x - HESSIAN_STEP * u)
            hessian[:, j] = basis.T @ difference / (2 * HESSIAN_STEP)
        hessian = (hessian + hessian.T) / 2

        try:
            step = -scipy.linalg.cho_solve(scipy.linalg.cho_factor(hessian), reduced)
        except np.linalg.LinAlgError:
            step = -reduced
        if not reduced @ step < 0:
            step = -reduced

        direction = basis @ step
        norm = float(np.linalg.norm(direction))
        if norm > 1.0:
            direction /= norm
        return direction

    def _line_search(self, x, f, direction, gradient_norm):

        slope = float(self.gradient() @ direction)
        if not slope < 0:
            return None
        t = 1.0
        for _ in range(60):
            trial = self._retract(x + t * direction)
            if trial is not None:
                f_trial = self._perimeter(trial)
                if f_trial <= f + 1e-4 * t * slope:
                    return (trial, f_trial)
                # below rounding the Armijo test is noise; settle for a smaller gradient
                if -t * slope <= 1e-12 and f_trial <= f + 1e-12 and self._reduced_gradient_norm(trial) < gradient_norm:
                    return (trial, f_trial)
            t /= 2
        return None

    def lagrange_multiplier(self, x):
        """ optimizer.lagrange_multiplier(x)

        The vector z of Lorentz space with <z, M_k> = -g_k in the least
        squares sense, its projection lambda on x0 and the relative deviation
        of z from lambda x0.

        :returns: (z, lambda, deviation)
        :rtype: tuple
        """
        m = self._space.jacobian_vector(x)
        euclidean = np.linalg.lstsq(m.T, -self.gradient(), rcond=None)[0]
        z = J @ euclidean
        x0 = self._space.cf.x0
        lam = float(z @ x0 / (x0 @ x0))
        size = float(np.linalg.norm(z))
        deviation = float(np.linalg.norm(z - lam * x0)) / size if size > 0 else 0.0
        return (z, lam, deviation)

    def _result(self, x, iterations, converged, escapes, history, message):

        residual = float(np.linalg.norm(self._space.residual_vector(x)))
        poly = self._space.develop_vector(x, residual)
        spread = self._space.cf.tangency_spread(poly.edge_lines)
        (z, lam, deviation) = self.lagrange_multiplier(x)
        gradient_norm = 0.0 if self._space.n == 1 else self._reduced_gradient_norm(x)
        if converged and spread > self.option('spread'):
            log.warning('converged with tangency spread %.3g', spread)
        return opt_result(
            polygon_params.from_vector(x),
            self._perimeter(x),
            iterations,
            converged,
            tangency_spread=spread,
            lagrange_z=z,
            lagrange_lambda=lam,
            lagrange_deviation=deviation,
            residual=residual,
            gradient_norm=gradient_norm,
            boundary_escapes=escapes,
            history=history,
            message=message,
        )

    def criticality_certificate(self, poly):
        """ optimizer.criticality_certificate(poly)

        :returns: The certificate
        :rtype: certificate
        :raises ClosureError: when the polygon does not close
        """
        x = poly.params.as_vector()
        residual = float(np.linalg.norm(self._space.residual_vector(x)))
        if residual > self.option('residual'):
            raise ClosureError('Criticality needs a closed polygon (residual %.3g)' % residual)

        extended = np.vstack([self._space.jacobian_vector(x), self.gradient()])
        singular = np.linalg.svd(extended, compute_uv=False)
        if len(singular) < 4:
            # one edge: M already has full column rank
            (ratio, critical) = (0.0, True)
        else:
            ratio = float(singular[3] / singular[0])
            critical = ratio <= self.option('rank')

        values = self._space.cf.equidistant_values(poly.edge_lines)
        return certificate(critical, singular, ratio, values, residual)

    def boundary_escape(self, params):
        """ optimizer.boundary_escape(params)

        Moves a closed configuration on the boundary of the polygon space into
        its interior with a strictly smaller perimeter.  Interior parameters
        are returned unchanged.

        :returns: Parameters in the polygon space
        :rtype: polygon_params
        :raises BoundaryEscapeError: when params is neither inside nor on the boundary, or no step works
        """
        x = self._project(params.as_vector())
        report = self._membership(x)
        if report.passed:
            return params
        if not report.boundary:
            raise BoundaryEscapeError('Not a boundary configuration: %s' % '; '.join(report.errors))
        return polygon_params.from_vector(self._escape(x))

    def _active_set(self, x, gap):

        cf = self._space.cf
        residual = float(np.linalg.norm(self._space.residual_vector(x)))
        poly = self._space.develop_vector(x, residual)
        bound = -1.0 if cf.name == GEODESIC else 0.0
        active = {
            'lengths': [index + 2 for (index, length) in enumerate(x[2:]) if length <= gap],
            'l0': cf.name == CONE and x[0] <= gap,
            'edges': [index for (index, value) in enumerate(cf.equidistant_values(poly.edge_lines)) if value >= bound - gap],
        }
        if not (active['lengths'] or active['l0'] or active['edges']):
            return None
        return active

    def _escape(self, x, gap=1e-9):

        active = self._active_set(x, gap)
        if active is None:
            raise BoundaryEscapeError('No active boundary constraint to move away from')
        f = self._perimeter(x)

        escaped = None
        if active['l0'] and x[0] <= 1e-9:
            x = self._realign_cone_vertex(x)
            if not active['lengths']:
                escaped = self._escape_along(x, f, self._cone_vertex_direction(x))

        if escaped is None:
            escaped = self._escape_along(x, f, self._escape_direction(x, active))
        if escaped is None:
            raise BoundaryEscapeError('No step along the escape direction enters the polygon space')

        log.info('boundary escape: perimeter %.17g -> %.17g', f, self._perimeter(escaped))
        return escaped

    def _realign_cone_vertex(self, x):
        """ With the first vertex on the cone point theta only spins the polygon about it: choose it so that (1-gamma)e0 is a positive multiple of e_1 + e_n. """

        cf = self._space.cf
        lines = self._space.develop_vector(x).edge_lines
        u = lines[0] + lines[-1]
        t = (np.eye(3) - cf.gamma.matrix) @ cf.e0
        if lorentz_dot(u, u) <= 1e-24:
            return x
        phi = math.atan2(lorentz_dot(boxtimes(cf.x0, u), t), lorentz_dot(u, t))
        aligned = np.array(x, dtype=float)
        aligned[1] = (aligned[1] - phi) % (2 * math.pi)
        return aligned

    def _cone_vertex_direction(self, x):

        cf = self._space.cf
        lines = self._space.develop_vector(x).edge_lines
        u = lines[0] + lines[-1]
        t = (np.eye(3) - cf.gamma.matrix) @ cf.e0
        lam = lorentz_dot(t, u) / lorentz_dot(u, u)
        direction = np.zeros(len(x))
        direction[0] = 1.0
        direction[2] -= lam
        direction[-1] -= lam
        return direction

    def _escape_direction(self, x, active):
        """ Tangent direction of most negative perimeter derivative moving every active constraint inside. """

        k = len(x)
        bounds = [(-ESCAPE_BOX, ESCAPE_BOX)] * k
        for index in active['lengths']:
            bounds[index] = (ESCAPE_MARGIN, ESCAPE_BOX)
        if active['l0']:
            bounds[0] = (ESCAPE_MARGIN, ESCAPE_BOX)

        (a_ub, b_ub) = (None, None)
        if active['edges']:
            a_ub = self._space.line_sensitivity(x)[active['edges']]
            b_ub = np.full(len(active['edges']), -ESCAPE_MARGIN)

        solution = scipy.optimize.linprog(
            self.gradient(),
            A_ub=a_ub,
            b_ub=b_ub,
            A_eq=self._space.jacobian_vector(x),
            b_eq=np.zeros(3),
            bounds=bounds,
            method='highs',
        )
        if solution.status != 0:
            raise BoundaryEscapeError('No escape direction: %s' % solution.message)
        if not solution.fun < 0:
            raise BoundaryEscapeError('No escape direction decreases the perimeter')
        return solution.x

    def _escape_along(self, x, f, direction):

        t = 1e-2
        for _ in range(40):
            trial = self._retract(x + t * direction)
            if trial is not None and self._perimeter(trial) < f:
                return trial
            t /= 2
        return None

    def random_feasible(self, seed):
        """ optimizer.random_feasible(seed)

        A member of the polygon space whose edge lines are tangent to
        equidistants of randomly drawn sizes around the centre; the same seed
        always gives the same polygon.  Nothing here knows the optimal
        polygon, so starts built this way can check it independently.

        :returns: Chart coordinates
        :rtype: polygon_params
        :raises SamplerExhaustedError: when no drawn set of sizes bounds a polygon of the space
        """
        rng = np.random.default_rng(seed)
        builder = optimal_construction(self._space.cf, self._space.spec, self._options)
        spread = rng.uniform(*SAMPLE_SPREAD)
        for attempt in range(SAMPLE_ATTEMPTS):
            ratios = np.exp(rng.uniform(-spread, spread, self._space.n))
            try:
                params = builder.tangent_polygon(ratios)[0]
            except GeometryError as e:
                log.info('sample %d of seed %d rejected: %s', attempt, seed, e)
                spread *= SAMPLE_SHRINK
                continue
            return params
        raise SamplerExhaustedError('No drawn polygon landed in the polygon space (seed %d)' % seed)

    def multi_start(self, starts, seed=0):
        """ optimizer.multi_start(starts, seed=0)

        Minimises from ``starts`` random polygons drawn with seeds seed,
        seed + 1, ...  Failed starts are kept as non converged results.

        :returns: Results ordered by perimeter, then start index
        :rtype: list
        """
        results = []
        for index in range(starts):
            try:
                result = self.minimize(self.random_feasible(seed + index))
            except GeometryError as e:
                log.info('start %d failed: %s', index, e)
                result = opt_result(None, None, 0, False, message=str(e))
            result.start = index
            result.seed = seed + index
            results.append(result)
        return sorted(results, key=lambda r: (r.perimeter if r.perimeter is not None else math.inf, r.start))

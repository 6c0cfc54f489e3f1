""" Floating point kernel for the hyperboloid model of the hyperbolic plane.

Vectors of Lorentz space are numpy arrays of shape (3,) with the timelike
coordinate first.  Unit timelike vectors on the upper sheet are points,
unit spacelike vectors are oriented lines (their outward normal) and
future lightlike vectors are horocycles.  Isometries are wrapped in
:class:`isometry` so that frames and motions compose with ``@``.
"""

import math

import numpy as np

from .errors import NormalizationError, OutOfChartError

J = np.diag([-1.0, 1.0, 1.0])

TIMELIKE = 'timelike'
SPACELIKE = 'spacelike'
LIGHTLIKE = 'lightlike'

# scale free tolerance used to call a vector lightlike
CLASS_TOLERANCE = 1e-9
def vector(x0, x1, x2):

    return np.array([x0, x1, x2], dtype=float)
def lorentz_dot(u, v):
    """ lorentz_dot(u, v)

    The Lorentz product -u0 v0 + u1 v1 + u2 v2.

    :param u: A Lorentz vector
    :param v: A Lorentz vector
    :type u: numpy.ndarray
    :type v: numpy.ndarray
    :returns: The product
    :rtype: float
    """
    return float(-u[0] * v[0] + u[1] * v[1] + u[2] * v[2])
def lorentz_norm2(v):

    return lorentz_dot(v, v)
def classify(v, tol=CLASS_TOLERANCE):
    """ classify(v, tol=1e-9)

    Returns one of TIMELIKE, SPACELIKE or LIGHTLIKE.  The test is made on
    <v,v> after scaling v to unit Euclidean length, so it does not depend on
    the size of v.  The zero vector has no causal type and raises
    NormalizationError.
    """
    v = np.asarray(v, dtype=float)
    scale = float(np.dot(v, v))
    if scale == 0.0:
        raise NormalizationError('The zero vector has no causal type')

    q = lorentz_dot(v, v) / scale
    if abs(q) <= tol:
        return LIGHTLIKE
    return SPACELIKE if q > 0 else TIMELIKE
def boxtimes(u, v):
    """ boxtimes(u, v)

    Lorentz cross product, defined by <u⊠v, w> = det(u, v, w) for every w.
    It is J applied to the Euclidean cross product.
    """
    return J @ np.cross(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
def det3(u, v, w):

    return float(np.linalg.det(np.column_stack([u, v, w])))
def hat(v):
    """ hat(v)

    The matrix of w -> v⊠w, an element of so(2,1).
    """
    v = np.asarray(v, dtype=float)
    skew = np.array([
        [0.0, -v[2], v[1]],
        [v[2], 0.0, -v[0]],
        [-v[1], v[0], 0.0],
    ])
    return J @ skew
def vee(k):
    """ vee(k)

    Inverse of hat for matrices of so(2,1).
    """
    skew = J @ np.asarray(k, dtype=float)
    return np.array([skew[2, 1], skew[0, 2], skew[1, 0]])
def normalize_point(v):

    v = np.asarray(v, dtype=float)
    q = lorentz_dot(v, v)
    if not q < 0:
        raise NormalizationError('Cannot normalize %s as a point: it is not timelike' % (v, ))
    p = v / math.sqrt(-q)
    return p if p[0] > 0 else -p
def normalize_line(v):

    v = np.asarray(v, dtype=float)
    q = lorentz_dot(v, v)
    if not q > 0:
        raise NormalizationError('Cannot normalize %s as a line: it is not spacelike' % (v, ))
    return v / math.sqrt(q)
def is_point(v, tol=1e-9):

    v = np.asarray(v, dtype=float)
    return abs(lorentz_dot(v, v) + 1.0) <= tol and v[0] > 0
def is_line(v, tol=1e-9):

    return abs(lorentz_dot(v, v) - 1.0) <= tol
def is_horocycle(v, tol=CLASS_TOLERANCE):

    v = np.asarray(v, dtype=float)
    if not np.any(v):
        return False
    return classify(v, tol) == LIGHTLIKE and v[0] > 0
def point_distance(p, q):
    """ point_distance(p, q)

    Hyperbolic distance between two points.  Evaluated as
    2 asinh(|p - q| / 2), which equals acosh(-<p,q>) without the loss of
    precision acosh suffers next to 1.
    """
    diff = np.asarray(p, dtype=float) - np.asarray(q, dtype=float)
    return 2.0 * math.asinh(math.sqrt(max(0.0, lorentz_dot(diff, diff))) / 2.0)
def tangent_toward(p, target):
    """ tangent_toward(p, target)

    Unit tangent vector at the point p pointing along the geodesic toward
    target, which may be a point or an ideal point given by a lightlike vector.
    """
    t = np.asarray(target, dtype=float) + lorentz_dot(target, p) * np.asarray(p, dtype=float)
    q = lorentz_dot(t, t)
    if q <= 0.0:
        raise NormalizationError('No direction from a point toward itself')
    return t / math.sqrt(q)
def exp_so21(v, t=1.0, tol=CLASS_TOLERANCE):
    """ exp_so21(v, t=1.0)

    The one parameter subgroup generated by hat(v), evaluated at t.  Uses
    hat(v)^3 = <v,v> hat(v) to sum the series in closed form:

    =========  ===============================================
    v          result
    =========  ===============================================
    timelike   rotation by t|v| about the point v/|v|
    spacelike  translation by t|v| along the line v/|v|
    lightlike  parabolic fixing the ideal point of v
    =========  ===============================================

    A rotation is counterclockwise for positive t.  A translation along a
    unit spacelike v moves points of the line with velocity v⊠p.

    :param v: Generator, any nonzero Lorentz vector
    :param t: Time
    :returns: The isometry
    :rtype: isometry
    """
    v = np.asarray(v, dtype=float)
    euclidean = float(np.dot(v, v))
    if euclidean == 0.0:
        raise NormalizationError('Cannot exponentiate the zero vector')

    k = hat(v)
    q = lorentz_dot(v, v)
    if abs(q) / euclidean <= tol:
        # second order terms keep the near lightlike case consistent with the others
        x = q * t * t
        a = t * (1.0 + x / 6.0)
        b = t * t / 2.0 * (1.0 + x / 12.0)
    elif q > 0:
        s = math.sqrt(q)
        a = math.sinh(s * t) / s
        b = 2.0 * math.sinh(s * t / 2.0)**2 / q
    else:
        s = math.sqrt(-q)
        a = math.sin(s * t) / s
        b = 2.0 * math.sin(s * t / 2.0)**2 / -q

    return isometry(np.eye(3) + a * k + b * (k @ k))
def log_so21(m, tol=CLASS_TOLERANCE, max_angle=math.pi - 1e-6):
    """ log_so21(m)

    Inverse of exp_so21 on its chart: returns u with exp_so21(u, 1) = m.
    Rotations by an angle near pi are outside the chart and raise
    OutOfChartError.

    :param m: An isometry or a 3x3 matrix
    :returns: The generator
    :rtype: numpy.ndarray
    """
    m = m.matrix if isinstance(m, isometry) else np.asarray(m, dtype=float)

    # the J-antisymmetric part of exp(hat(u)) is a multiple of hat(u)
    skew_part = vee((m - J @ m.T @ J) / 2.0)
    euclidean = float(np.dot(skew_part, skew_part))
    if euclidean == 0.0:
        cosine = (np.trace(m) - 1.0) / 2.0
        if cosine < 0:
            raise OutOfChartError('Half turn has no logarithm in the chart')
        return np.zeros(3)

    q = lorentz_dot(skew_part, skew_part)
    if abs(q) / euclidean <= tol:
        return skew_part

    if q > 0:
        s = math.asinh(math.sqrt(q))
        return skew_part * (s / math.sinh(s))

    sine = math.sqrt(-q)
    cosine = (np.trace(m) - 1.0) / 2.0
    angle = math.atan2(sine, cosine)
    if angle > max_angle:
        raise OutOfChartError('Rotation by %.12g is outside the logarithm chart' % angle)
    return skew_part * (angle / sine)
def poincare_project(p, tol=1e-9):
    """ poincare_project(p)

    Coordinates of the point p in the Poincare disc.  With tol=None the
    point is taken as given, for callers that already normalized it.
    """
    p = np.asarray(p, dtype=float)
    if tol is not None and not is_point(p, tol):
        raise NormalizationError('Only normalized points can be projected to the disc, got %s' % (p, ))
    return (float(p[1] / (1.0 + p[0])), float(p[2] / (1.0 + p[0])))
class isometry(object):
    """ frame = isometry(matrix)

    Orientation preserving isometry of the hyperbolic plane, stored as a 3x3
    matrix preserving the Lorentz form.  The same object is used as a frame of
    the unit tangent bundle: the identity is the reference frame at (1,0,0).

    Composition and action both use ``@``:

    ===================  ======================
    Expression           Meaning
    ===================  ======================
    a @ b                composition, an isometry
    a @ v                action on a Lorentz vector
    ===================  ======================
    """

    _matrix = None

    def __init__(self, matrix, tol=None):

        self._matrix = np.array(matrix, dtype=float)
        if self._matrix.shape != (3, 3):
            raise ValueError('An isometry needs a 3x3 matrix, got shape %s' % (self._matrix.shape, ))

        if tol is not None:
            errors = self.errors(tol)
            if errors:
                raise NormalizationError('Invalid isometry: %s' % '; '.join(errors))

    @classmethod
    def identity(cls):

        return cls(np.eye(3))

    @property
    def matrix(self):
        """ Public getter.  Returns a copy of the underlying matrix.

        :returns: The matrix
        :rtype: numpy.ndarray
        """

        return self._matrix.copy()

    def __matmul__(self, other):

        if isinstance(other, isometry):
            return isometry(self._matrix @ other._matrix)

        return self._matrix @ np.asarray(other, dtype=float)

    def inverse(self):

        return isometry(J @ self._matrix.T @ J)

    def distance(self, other):
        """ Largest entrywise difference with another isometry. """

        return float(np.max(np.abs(self._matrix - other._matrix)))

    def errors(self, tol=1e-10):
        """ isometry.errors(tol=1e-10)

        Lists every way in which the matrix fails to be an orientation
        preserving isometry of the upper sheet.

        :returns: A list of human readable problems, empty when valid
        :rtype: list
        """
        errors = []
        defect = float(np.max(np.abs(self._matrix.T @ J @ self._matrix - J)))
        if defect > tol:
            errors.append('Lorentz form not preserved (defect %.3g)' % defect)
        determinant = float(np.linalg.det(self._matrix))
        if abs(determinant - 1.0) > tol:
            errors.append('Determinant is %.12g instead of 1' % determinant)
        if not self._matrix[0, 0] > 0:
            errors.append('Upper sheet is not preserved')
        return errors

    def is_valid(self, tol=1e-10):

        return not self.errors(tol)
class incidence_report(object):
    """ report = incidence_report(relation, value, sign, product)

    Relative position of two normalized Lorentz vectors.  ``value`` is a
    distance, an angle or a signed distance depending on ``relation``:

    ========================  ==========================================
    relation                  value
    ========================  ==========================================
    distance                  distance between two points
    on line / off line        distance from a point to a line
    tangent / secant /        the product itself (horocycle and line)
    disjoint / centered at
    endpoint
    on horocycle / inside /   signed distance from a point to a horocycle
    outside
    tangent / overlapping /   signed distance between two horocycles
    separated / concentric
    intersecting              angle between two lines
    asymptotic / disjoint     distance between two lines
    ========================  ==========================================

    ``sign`` is the sign of the Lorentz product (0 when it vanishes).  For a
    point and a line it is negative exactly when the point lies in the
    half-plane the line bounds.
    """

    def __init__(self, relation, value, sign, product):

        self._relation = relation
        self._value = value
        self._sign = sign
        self._product = product

    @property
    def relation(self):
        """ Public getter.  Returns the kind of configuration.

        :returns: The relation name
        :rtype: string
        """

        return self._relation

    @property
    def value(self):

        return self._value

    @property
    def sign(self):

        return self._sign

    @property
    def product(self):
        """ Public getter.  Returns the Lorentz product of the two inputs.

        :returns: The product
        :rtype: float
        """

        return self._product
def _normalized_kind(v, tol):

    v = np.asarray(v, dtype=float)
    kind = classify(v)
    if kind == TIMELIKE and not is_point(v, tol):
        raise NormalizationError('Timelike input %s is not a normalized point' % (v, ))
    if kind == SPACELIKE and not is_line(v, tol):
        raise NormalizationError('Spacelike input %s is not a normalized line' % (v, ))
    if kind == LIGHTLIKE and not v[0] > 0:
        raise NormalizationError('Lightlike input %s is not future pointing' % (v, ))
    return kind
def _sign(value, tol):

    if abs(value) <= tol:
        return 0
    return 1 if value > 0 else -1
def incidence(u, v, tol=1e-9):
    """ incidence(u, v, tol=1e-9)

    Reads the relative position of two objects off their Lorentz product.
    Inputs may come in either order; unnormalized or zero vectors raise
    NormalizationError.

    :returns: The report
    :rtype: incidence_report
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    kinds = (_normalized_kind(u, tol), _normalized_kind(v, tol))
    product = lorentz_dot(u, v)
    sign = _sign(product, tol)

    if kinds == (TIMELIKE, TIMELIKE):
        return incidence_report('distance', point_distance(u, v), sign, product)

    if set(kinds) == {TIMELIKE, SPACELIKE}:
        relation = 'on line' if sign == 0 else 'off line'
        return incidence_report(relation, math.asinh(abs(product)), sign, product)

    if set(kinds) == {LIGHTLIKE, SPACELIKE}:
        if sign == 0:
            relation = 'centered at endpoint'
        elif abs(abs(product) - 1.0) <= tol:
            relation = 'tangent'
        elif abs(product) < 1.0:
            relation = 'secant'
        else:
            relation = 'disjoint'
        return incidence_report(relation, product, sign, product)

    if set(kinds) == {LIGHTLIKE, TIMELIKE}:
        signed = math.log(-product)
        if abs(signed) <= tol:
            relation = 'on horocycle'
        else:
            relation = 'inside' if signed < 0 else 'outside'
        return incidence_report(relation, signed, sign, product)

    if kinds == (LIGHTLIKE, LIGHTLIKE):
        if sign == 0:
            return incidence_report('concentric', math.log(u[0] / v[0]), sign, product)
        signed = math.log(-product / 2.0)
        if abs(signed) <= tol:
            relation = 'tangent'
        else:
            relation = 'overlapping' if signed < 0 else 'separated'
        return incidence_report(relation, signed, sign, product)

    # two lines
    if abs(product) < 1.0 - tol:
        return incidence_report('intersecting', math.acos(product), sign, product)
    if abs(abs(product) - 1.0) <= tol:
        return incidence_report('asymptotic', 0.0, sign, product)
    return incidence_report('disjoint', 2.0 * math.asinh(math.sqrt((abs(product) - 1.0) / 2.0)), sign, product)

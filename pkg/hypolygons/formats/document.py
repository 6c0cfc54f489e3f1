""" A polygon written down with everything needed to check it again.

The document is a JSON object with its keys always in this order::

    {
      "center": {"kind": "cone", "param": 3.5},
      "angles": [...],
      "params": {"l0": ..., "theta": ..., "lengths": [...]},
      "vertices": [[x0, x1, x2], ...],
      "edge_lines": [[x0, x1, x2], ...],
      "perimeter": ...,
      "certificates": {"residual": ..., "tangency_spread": ..., "critical": ..., "lambda": ..., "membership": [...]}
    }

Floats are written with the shortest representation that reads back to the
same double, so a document read and written again is byte identical.
"""

import json
import math

from ..geometry.center import CUSP, KINDS, make_center
from ..geometry.polygon_space import angle_spec, polygon_params, polygon_space
class DocumentError(ValueError):
    pass
class document(object):
    """ doc = document(kind, parameter, angles, params, vertices, edge_lines, perimeter, certificates)

    Build one with document.from_polygon() or document.loads().
    """

    def __init__(self, kind, parameter, angles, params, vertices, edge_lines, perimeter, certificates=None):

        self.kind = kind
        self.parameter = parameter
        self.angles = [float(angle) for angle in angles]
        self.params = params
        self.vertices = [[float(value) for value in vertex] for vertex in vertices]
        self.edge_lines = [[float(value) for value in line] for line in edge_lines]
        self.perimeter = float(perimeter)
        self.certificates = {
            'residual': None,
            'tangency_spread': None,
            'critical': None,
            'lambda': None,
            'membership': [],
        }
        if certificates:
            self.certificates.update(certificates)

    @classmethod
    def from_polygon(cls, cf, spec, poly, membership=None, certificate=None):
        """ document.from_polygon(cf, spec, poly, membership=None, certificate=None)

        :param cf: The centre
        :param spec: The angles
        :param poly: The developed polygon
        :param membership: The membership_report of the polygon, if checked
        :param certificate: A criticality certificate, if computed
        :rtype: document
        """
        certificates = {
            'residual': float(poly.residual),
            'tangency_spread': float(cf.tangency_spread(poly.edge_lines)),
        }
        if certificate is not None:
            certificates['critical'] = bool(certificate.critical)
            certificates['lambda'] = float(certificate.lagrange_lambda)
        if membership is not None:
            certificates['membership'] = list(membership.errors)

        return cls(
            cf.name,
            None if cf.name == CUSP else float(cf.holonomy),
            spec.beta,
            poly.params,
            poly.vertices,
            poly.edge_lines,
            poly.perimeter,
            certificates,
        )

    @property
    def zero_length_edges(self):
        """ 1 based indexes of the edges of length zero. """

        return [index + 1 for (index, length) in enumerate(self.params.lengths) if length <= 0.0]

    def as_dict(self):

        return {
            'center': {
                'kind': self.kind,
                'param': self.parameter
            },
            'angles': list(self.angles),
            'params': {
                'l0': float(self.params.l0),
                'theta': float(self.params.theta),
                'lengths': [float(length) for length in self.params.lengths],
            },
            'vertices': [list(vertex) for vertex in self.vertices],
            'edge_lines': [list(line) for line in self.edge_lines],
            'perimeter': self.perimeter,
            'certificates': {
                'residual': self.certificates['residual'],
                'tangency_spread': self.certificates['tangency_spread'],
                'critical': self.certificates['critical'],
                'lambda': self.certificates['lambda'],
                'membership': list(self.certificates['membership']),
            },
        }

    def dumps(self):

        return json.dumps(self.as_dict(), indent=2, allow_nan=False) + "\n"

    def write(self, path):

        with open(path, 'w', encoding='utf-8') as fp:
            fp.write(self.dumps())

    @classmethod
    def read(cls, path):
        """ document.read(path)

        :raises DocumentError: when the file cannot be read or is not a polygon document
        """
        try:
            with open(path, 'r', encoding='utf-8') as fp:
                contents = fp.read()
        except OSError as e:
            raise DocumentError("Cannot read document '%s': %s" % (path, e))
        return cls.loads(contents)

    @classmethod
    def loads(cls, contents):

        try:
            data = json.loads(contents)
        except ValueError as e:
            raise DocumentError('Document is not valid JSON: %s' % e)
        if not isinstance(data, dict):
            raise DocumentError('Document must be a JSON object')

        for key in ('center', 'angles', 'params', 'vertices', 'edge_lines', 'perimeter'):
            if not key in data:
                raise DocumentError("Document is missing '%s'" % key)

        center = _mapping(data['center'], 'center')
        kind = center.get('kind')
        if not kind in KINDS:
            raise DocumentError("Unknown centre kind '%s' in document" % kind)
        parameter = center.get('param')
        if kind != CUSP:
            parameter = _number(parameter, 'center.param')

        angles = _numbers(data['angles'], 'angles')
        params = _mapping(data['params'], 'params')
        lengths = _numbers(params.get('lengths'), 'params.lengths')
        if len(lengths) != len(angles):
            raise DocumentError('Document has %d angles but %d lengths' % (len(angles), len(lengths)))

        vertices = [_numbers(vertex, 'vertices', 3) for vertex in _list(data['vertices'], 'vertices')]
        edge_lines = [_numbers(line, 'edge_lines', 3) for line in _list(data['edge_lines'], 'edge_lines')]
        if len(vertices) != len(angles) or len(edge_lines) != len(angles):
            raise DocumentError('Document needs one vertex and one edge line per angle, got %d angles' % len(angles))

        certificates = data.get('certificates') or {}
        certificates = _mapping(certificates, 'certificates')
        unknown = set(certificates) - set(['residual', 'tangency_spread', 'critical', 'lambda', 'membership'])
        if unknown:
            raise DocumentError('Unknown certificates in document: %s' % ', '.join(sorted(unknown)))
        if not all(isinstance(message, str) for message in _list(certificates.get('membership', []), 'certificates.membership')):
            raise DocumentError("'certificates.membership' must list messages in the document")

        return cls(
            kind,
            parameter,
            angles,
            polygon_params(_number(params.get('l0'), 'params.l0'), _number(params.get('theta'), 'params.theta'), lengths),
            vertices,
            edge_lines,
            _number(data['perimeter'], 'perimeter'),
            certificates,
        )

    def to_space(self, tolerances=None):
        """ doc.to_space(tolerances=None)

        The polygon space the document's polygon belongs to.

        :rtype: polygon_space
        """
        return polygon_space(make_center(self.kind, self.parameter), angle_spec(self.angles), tolerances)
def _mapping(value, name):

    if not isinstance(value, dict):
        raise DocumentError("'%s' must be an object in the document" % name)
    return value
def _list(value, name):

    if not isinstance(value, list):
        raise DocumentError("'%s' must be a list in the document" % name)
    return value
def _number(value, name):

    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError("'%s' must be a number in the document" % name)
    if not math.isfinite(value):
        raise DocumentError("'%s' must be finite in the document" % name)
    return float(value)
def _numbers(value, name, size=None):

    values = [_number(item, name) for item in _list(value, name)]
    if size is not None and len(values) != size:
        raise DocumentError("'%s' entries must have %d coordinates" % (name, size))
    return values

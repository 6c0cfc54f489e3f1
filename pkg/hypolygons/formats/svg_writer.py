""" Static pictures of a polygon document in the Poincare disc.

Lines of the hyperboloid become circles orthogonal to the unit circle: the
line with outward normal e = (e0, e1, e2) is the circle of centre
(e1, e2) / e0 and radius 1 / |e0|, or a diameter when e0 = 0.
"""

import math

import numpy as np

from ..geometry.center import CONE, CUSP, make_center
from ..geometry.lorentz import boxtimes, lorentz_dot, normalize_point, poincare_project

# below this |e0| a line is drawn as a straight segment
STRAIGHT_LINE = 1e-9

# orbit samples per holonomy period of the equidistant curve
ORBIT_SAMPLES = 96
class svg_writer(object):
    """ writer = svg_writer(doc, size=480, translates=(-1, 1))

    Draws the unit circle, the polygon of ``doc`` with its edges as
    geodesic arcs, the equidistant curve through the foot points of its
    edges and the centre.  Each k of ``translates`` adds the image of the
    polygon under gamma^k, drawn lighter.
    """

    def __init__(self, doc, size=480, translates=(-1, 1)):

        self.doc = doc
        self.size = int(size)
        self.translates = tuple(translates)
        self.cf = make_center(doc.kind, doc.parameter)
        self._scale = (self.size / 2.0) * 0.92

    def render(self):
        """ writer.render()

        :returns: The SVG document
        :rtype: str
        """
        half = self.size / 2.0
        parts = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" viewBox="0 0 %d %d">' % (
                self.size, self.size, self.size, self.size
            ),
            _element('rect', [('x', 0), ('y', 0), ('width', self.size), ('height', self.size), ('fill', 'white')]),
            _element(
                'circle',
                [('cx', half), ('cy', half), ('r', self._scale), ('fill', 'none'), ('stroke', 'black'), ('stroke-width', 1)]
            ),
        ]

        for k in self.translates:
            parts.append(self._polygon(k, '#9aa7b8', 0.75))
        parts.append(self._equidistant())
        parts.append(self._polygon(0, '#1f4e9c', 1.5))
        parts.append(self._center())
        parts.extend(self._annotations())
        parts.append('</svg>')
        return "\n".join(parts) + "\n"

    def write(self, path):

        with open(path, 'w', encoding='utf-8') as fp:
            fp.write(self.render())

    def _screen(self, z):

        half = self.size / 2.0
        return (half + self._scale * z[0], half - self._scale * z[1])

    def _path_vertices(self, k):

        vertices = [np.array(vertex) for vertex in self.doc.vertices]
        vertices.append(self.cf.gamma @ vertices[0])
        move = self._power(k)
        return [normalize_point(move @ vertex) for vertex in vertices]

    def _power(self, k):

        return self.cf.centralizer(k * self.cf.holonomy)

    def _polygon(self, k, color, width):

        vertices = self._path_vertices(k)
        move = self._power(k)
        lines = [move @ np.array(line) for line in self.doc.edge_lines]

        start = self._screen(poincare_project(vertices[0], None))
        commands = ['M %s %s' % (_number(start[0]), _number(start[1]))]
        for (index, line) in enumerate(lines):
            commands.append(self._edge(vertices[index], vertices[index + 1], line))
        return _element(
            'path',
            [('d', ' '.join(commands)), ('fill', 'none'), ('stroke', color), ('stroke-width', width)],
        )

    def _edge(self, a, b, line):
        """ Path command drawing the geodesic segment from a to b on the given line. """

        (za, zb) = (poincare_project(a, None), poincare_project(b, None))
        end = self._screen(zb)
        if abs(line[0]) <= STRAIGHT_LINE or math.hypot(zb[0] - za[0], zb[1] - za[1]) <= 1e-12:
            return 'L %s %s' % (_number(end[0]), _number(end[1]))

        center = (line[1] / line[0], line[2] / line[0])
        radius = self._scale / abs(line[0])
        cross = (zb[0] - za[0]) * (center[1] - za[1]) - (zb[1] - za[1]) * (center[0] - za[0])
        # y is flipped on screen, so a counterclockwise arc is sweep 0
        sweep = 0 if cross > 0 else 1
        return 'A %s %s 0 0 %d %s %s' % (_number(radius), _number(radius), sweep, _number(end[0]), _number(end[1]))

    def _equidistant(self):
        """ The orbit of the first foot point under the centralizer of gamma. """

        foot = self.cf.foot_point(self.doc.edge_lines[0])
        if self.cf.name == CONE:
            steps = [2 * math.pi * i / ORBIT_SAMPLES for i in range(ORBIT_SAMPLES + 1)]
        else:
            period = self.cf.holonomy
            first = min(self.translates + (0, )) - 1
            last = max(self.translates + (0, )) + 2
            count = (last - first) * ORBIT_SAMPLES
            steps = [period * (first + (last - first) * i / count) for i in range(count + 1)]

        points = []
        for s in steps:
            z = self._screen(poincare_project(self.cf.centralizer(s) @ foot, None))
            points.append('%s,%s' % (_number(z[0]), _number(z[1])))
        return _element(
            'polyline',
            [('points', ' '.join(points)), ('fill', 'none'), ('stroke', '#c0392b'), ('stroke-width', 1),
             ('stroke-dasharray', '4 3')],
        )

    def _center(self):

        x0 = self.cf.x0
        if self.cf.name == CONE:
            z = self._screen(poincare_project(x0, None))
            return _element('circle', [('cx', z[0]), ('cy', z[1]), ('r', 3), ('fill', 'black')])

        if self.cf.name == CUSP:
            z = self._screen((x0[1] / x0[0], x0[2] / x0[0]))
            return _element('circle', [('cx', z[0]), ('cy', z[1]), ('r', 4), ('fill', 'none'), ('stroke', 'black')])

        # a closed geodesic: its axis between the two ideal end points
        (a, b) = _ideal_ends(x0)
        (za, zb) = (self._screen(a), self._screen(b))
        return _element(
            'line',
            [('x1', za[0]), ('y1', za[1]), ('x2', zb[0]), ('y2', zb[1]), ('stroke', 'black'), ('stroke-width', 1.5)],
        )

    def _annotations(self):

        doc = self.doc
        lines = ['perimeter %.10f' % doc.perimeter]
        spread = doc.certificates.get('tangency_spread')
        if spread is not None:
            lines.append('tangency spread %.3g' % spread)
        zero = doc.zero_length_edges
        if zero:
            lines.append('warning: zero length edge %s' % ', '.join(str(index) for index in zero))
        for message in doc.certificates.get('membership') or []:
            lines.append('warning: %s' % message)

        return [
            _element('text', [('x', 8), ('y', 16 + 14 * index), ('font-family', 'monospace'), ('font-size', 11)],
                     _escape(text)) for (index, text) in enumerate(lines)
        ]
def _ideal_ends(line):
    """ Disc coordinates of the two ideal end points of a line. """

    line = np.asarray(line, dtype=float)
    p0 = np.array([1.0, 0.0, 0.0])
    foot = normalize_point(p0 + lorentz_dot(p0, line) * line)
    tangent = boxtimes(line, foot)
    ends = []
    for sign in (1.0, -1.0):
        ideal = foot + sign * tangent
        ends.append((ideal[1] / ideal[0], ideal[2] / ideal[0]))
    return ends
def _number(value):

    text = '%.4f' % value
    text = text.rstrip('0').rstrip('.')
    return '0' if text in ('', '-0') else text
def _escape(text):

    return text.replace('&', '&amp;').replace('<', '&lt;').replace('>', '&gt;')
def _element(tag, attributes, inner=None):

    props = ' '.join('%s="%s"' % (name, _number(value) if isinstance(value, (int, float)) else value)
                     for (name, value) in attributes)
    if inner is None:
        return '<%s %s />' % (tag, props)
    return '<%s %s>%s</%s>' % (tag, props, inner, tag)
def render_svg(doc, size=480, translates=(-1, 1)):

    return svg_writer(doc, size, translates).render()

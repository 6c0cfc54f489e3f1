import os
import shutil
import tempfile
import unittest

from hypolygons.formats.document import document
from hypolygons.formats.svg_writer import _number, render_svg, svg_writer
from hypolygons.geometry.center import CONE, CUSP, GEODESIC
from hypolygons.geometry.lorentz import normalize_point, poincare_project
from tests.mocks.polygons import THIRD, cusp_zero_edge, optimal
def optimal_document(kind, parameter, angles):

    (polygons, params, poly, certificate) = optimal(kind, parameter, angles)
    return document.from_polygon(polygons.cf, polygons.spec, poly, certificate.membership)
class test_svg(unittest.TestCase):

    def test_deterministic(self):

        doc = optimal_document(CONE, 2.5, [2 * THIRD] * 3)

        self.assertEqual(render_svg(doc), render_svg(document.loads(doc.dumps())))

    def test_contents(self):

        for (kind, parameter, angles) in [
            (CUSP, None, [2 * THIRD] * 3),
            (CONE, 1.2, [1.4, 2.0, 0.8, 1.1]),
            (GEODESIC, 1.0, [1.2, 2.0, 1.7]),
        ]:
            svg = render_svg(optimal_document(kind, parameter, angles))
            self.assertTrue(svg.startswith('<?xml'), msg=kind)
            self.assertTrue(svg.endswith("</svg>\n"), msg=kind)
            self.assertIn(' A ', svg)
            self.assertIn('<circle cx="240" cy="240" r="220.8"', svg)
            self.assertIn('stroke-dasharray', svg)
            self.assertIn('perimeter ', svg)
            self.assertNotIn('nan', svg)
            self.assertNotIn('warning', svg)

    def test_translates(self):

        doc = optimal_document(GEODESIC, 2.5, [2 * THIRD] * 4)

        self.assertEqual(3, svg_writer(doc).render().count('<path '))
        self.assertEqual(1, svg_writer(doc, translates=()).render().count('<path '))

    def test_polygon_starts_at_projected_vertex(self):

        doc = optimal_document(CONE, 1.2, [1.4, 2.0, 0.8, 1.1])
        writer = svg_writer(doc, size=400, translates=())
        (x, y) = poincare_project(normalize_point(doc.vertices[0]))
        scale = 200 * 0.92

        self.assertIn('d="M %s %s ' % (_number(200 + scale * x), _number(200 - scale * y)), writer.render())

    def test_geodesic_axis(self):

        svg = render_svg(optimal_document(GEODESIC, 1.0, [1.2, 2.0, 1.7]))

        self.assertIn('<line ', svg)

    def test_zero_length_warning(self):

        (quad, params) = cusp_zero_edge()
        poly = quad.develop(params)
        doc = document.from_polygon(quad.cf, quad.spec, poly, quad.validate_membership(poly))
        svg = render_svg(doc)

        self.assertIn('warning: zero length edge 3', svg)
        self.assertIn('warning: edge 3 has length 0', svg)

    def test_write(self):

        directory = tempfile.mkdtemp()
        try:
            path = os.path.join(directory, 'cusp.svg')
            doc = optimal_document(CUSP, None, [2 * THIRD] * 3)
            svg_writer(doc, size=300).write(path)
            with open(path, 'r', encoding='utf-8') as fp:
                contents = fp.read()
            self.assertIn('width="300" height="300"', contents)
        finally:
            shutil.rmtree(directory)

import json
import os
import shutil
import tempfile
import unittest

from hypolygons.formats.document import DocumentError, document
from hypolygons.geometry.center import CONE, CUSP, GEODESIC
from hypolygons.optimize.perimeter import perimeter_optimizer
from tests.mocks.polygons import THIRD, cusp_zero_edge, optimal
def cone_document():

    (polygons, params, poly, certificate) = optimal(CONE, 2.5, [2 * THIRD] * 3)
    cert = perimeter_optimizer(polygons).criticality_certificate(poly)
    return document.from_polygon(polygons.cf, polygons.spec, poly, certificate.membership, cert)
class test_document(unittest.TestCase):

    def setUp(self):

        self.doc = cone_document()
        self.directory = tempfile.mkdtemp()

    def tearDown(self):

        shutil.rmtree(self.directory)

    def test_from_polygon(self):

        self.assertEqual('cone', self.doc.kind)
        self.assertEqual(2.5, self.doc.parameter)
        self.assertEqual(3, len(self.doc.vertices))
        self.assertEqual(3, len(self.doc.edge_lines))
        self.assertTrue(self.doc.certificates['critical'])
        self.assertEqual([], self.doc.certificates['membership'])
        self.assertLessEqual(self.doc.certificates['tangency_spread'], 1e-9)
        self.assertAlmostEqual(sum(self.doc.params.lengths), self.doc.perimeter, places=12)

    def test_key_order(self):

        data = json.loads(self.doc.dumps())

        self.assertEqual(['center', 'angles', 'params', 'vertices', 'edge_lines', 'perimeter', 'certificates'], list(data))
        self.assertEqual(['l0', 'theta', 'lengths'], list(data['params']))
        self.assertEqual(['residual', 'tangency_spread', 'critical', 'lambda', 'membership'], list(data['certificates']))

    def test_reread_is_identical(self):

        contents = self.doc.dumps()

        self.assertEqual(contents, document.loads(contents).dumps())
        self.assertTrue(contents.endswith("}\n"))

    def test_write_read(self):

        path = os.path.join(self.directory, 'cone.json')
        self.doc.write(path)
        again = document.read(path)

        self.assertEqual(self.doc.params.as_vector().tolist(), again.params.as_vector().tolist())
        self.assertEqual(self.doc.vertices, again.vertices)
        self.assertEqual(self.doc.perimeter, again.perimeter)

    def test_cusp_parameter(self):

        (polygons, params, poly, certificate) = optimal(CUSP, None, [2 * THIRD] * 3)
        doc = document.from_polygon(polygons.cf, polygons.spec, poly)
        data = json.loads(doc.dumps())

        self.assertIsNone(data['center']['param'])
        self.assertIsNone(data['certificates']['critical'])
        self.assertEqual(doc.dumps(), document.loads(doc.dumps()).dumps())

    def test_to_space(self):

        (polygons, params, poly, certificate) = optimal(GEODESIC, 1.0, [1.2, 2.0, 1.7])
        doc = document.loads(document.from_polygon(polygons.cf, polygons.spec, poly).dumps())
        space = doc.to_space()
        again = space.develop(doc.params)

        self.assertEqual('geodesic', space.cf.name)
        self.assertAlmostEqual(poly.perimeter, again.perimeter, places=14)
        self.assertTrue(space.validate_membership(again).passed)

    def test_zero_length_edges(self):

        (quad, params) = cusp_zero_edge()
        poly = quad.develop(params)
        doc = document.from_polygon(quad.cf, quad.spec, poly, quad.validate_membership(poly))

        self.assertEqual([3], doc.zero_length_edges)
        self.assertEqual(1, len(doc.certificates['membership']))
        self.assertEqual([], self.doc.zero_length_edges)

    def test_missing_file(self):

        with self.assertRaises(DocumentError):
            document.read(os.path.join(self.directory, 'nothing.json'))
class test_document_errors(unittest.TestCase):

    def setUp(self):

        self.data = json.loads(cone_document().dumps())

    def assertRejected(self, data):

        with self.assertRaises(DocumentError):
            document.loads(json.dumps(data))

    def test_not_json(self):

        with self.assertRaises(DocumentError):
            document.loads('{"center": ')
        with self.assertRaises(DocumentError):
            document.loads('[1, 2]')

    def test_missing_keys(self):

        for key in ['center', 'angles', 'params', 'vertices', 'edge_lines', 'perimeter']:
            data = dict(self.data)
            del data[key]
            self.assertRejected(data)

    def test_certificates_optional(self):

        del self.data['certificates']

        self.assertIsNone(document.loads(json.dumps(self.data)).certificates['residual'])

    def test_center(self):

        self.data['center'] = {'kind': 'disc', 'param': 1.0}
        self.assertRejected(self.data)
        self.data['center'] = {'kind': 'cone', 'param': 'wide'}
        self.assertRejected(self.data)
        self.data['center'] = {'kind': 'cone'}
        self.assertRejected(self.data)

    def test_counts(self):

        self.data['params']['lengths'] = self.data['params']['lengths'][:2]
        self.assertRejected(self.data)

    def test_vertices(self):

        data = json.loads(json.dumps(self.data))
        data['vertices'] = data['vertices'][:2]
        self.assertRejected(data)
        data = json.loads(json.dumps(self.data))
        data['edge_lines'][0] = [1.0, 0.0]
        self.assertRejected(data)

    def test_numbers(self):

        self.data['perimeter'] = True
        self.assertRejected(self.data)
        self.data['perimeter'] = 'long'
        self.assertRejected(self.data)

    def test_not_finite(self):

        contents = json.dumps(self.data).replace('"perimeter": %s' % json.dumps(self.data['perimeter']), '"perimeter": NaN')

        with self.assertRaises(DocumentError):
            document.loads(contents)

    def test_certificates(self):

        self.data['certificates']['opinion'] = 'fine'
        self.assertRejected(self.data)
        del self.data['certificates']['opinion']
        self.data['certificates']['membership'] = [1, 2]
        self.assertRejected(self.data)

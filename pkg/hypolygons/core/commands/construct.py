import sys

from .base import base
from hypolygons.construction.optimal import construct_optimal
from hypolygons.formats.document import document
from hypolygons.formats.svg_writer import svg_writer
from hypolygons.geometry.polygon_space import polygon_space
from hypolygons.optimize.perimeter import perimeter_optimizer
def execute(options):

    obj = construct(options)
    return obj.execute()
class construct(base):
    def execute(self):
        cf = self.center()
        spec = self.angles()
        spec.check_feasible(cf)

        (params, poly, built) = construct_optimal(cf, spec, self.tolerances)
        optimizer = perimeter_optimizer(polygon_space(cf, spec, self.tolerances), self.tolerances)
        doc = document.from_polygon(cf, spec, poly, built.membership, optimizer.criticality_certificate(poly))

        output = self.options.get('out')
        if output:
            doc.write(output)
            print('perimeter=%.10f level=%.10f spread=%.3g' % (poly.perimeter, built.level.value, built.tangency_spread))
        else:
            print(doc.dumps(), end='')

        if self.options.get('svg'):
            svg_writer(doc).write(self.options['svg'])

        if not built.passed:
            print('Constructed polygon failed its checks: %s' % '; '.join(built.membership.errors), file=sys.stderr)
            return 1
        return 0

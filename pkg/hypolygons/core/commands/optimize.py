import json
import sys

from .base import base
from hypolygons.construction.optimal import construct_optimal
from hypolygons.formats.document import document
from hypolygons.geometry.center import CUSP
from hypolygons.formats.svg_writer import svg_writer
from hypolygons.geometry.polygon_space import polygon_space
from hypolygons.optimize.perimeter import perimeter_optimizer
def execute(options):

    obj = optimize(options)
    return obj.execute()
class optimize(base):
    """ Multi start perimeter minimisation, checked against the constructed optimum. """

    default_starts = 10

    def execute(self):
        cf = self.center()
        spec = self.angles()
        spec.check_feasible(cf)

        starts = self.options.get('starts')
        starts = self.default_starts if starts is None else int(starts)
        seed = self.options.get('seed') or 0

        (params, optimal, built) = construct_optimal(cf, spec, self.tolerances)
        space = polygon_space(cf, spec, self.tolerances)
        optimizer = perimeter_optimizer(space, self.tolerances)
        results = optimizer.multi_start(starts, seed)
        converged = [result for result in results if result.converged]
        best = converged[0] if converged else None

        report = {
            'center': {'kind': cf.name, 'param': None if cf.name == CUSP else cf.holonomy},
            'angles': list(spec.beta),
            'optimal_perimeter': optimal.perimeter,
            'optimal_spread': built.tangency_spread,
            'best_perimeter': best.perimeter if best else None,
            'delta': abs(best.perimeter - optimal.perimeter) if best else None,
            'starts': [self._start_report(result) for result in sorted(results, key=lambda r: r.start)],
        }

        if self.options.get('json'):
            print(json.dumps(report, indent=2))
        else:
            for start in report['starts']:
                print(
                    'start=%d seed=%d converged=%s perimeter=%s spread=%s iterations=%d escapes=%d' % (
                        start['start'], start['seed'], 'true' if start['converged'] else 'false',
                        _float(start['perimeter'], '%.12f'), _float(start['tangency_spread'], '%.3g'),
                        start['iterations'], start['boundary_escapes']
                    )
                )
            print(
                'optimal=%.12f best=%s delta=%s' % (
                    optimal.perimeter, _float(report['best_perimeter'], '%.12f'), _float(report['delta'], '%.3g')
                )
            )

        if best is None:
            print('No start converged', file=sys.stderr)
            return 1

        if self.options.get('out') or self.options.get('svg'):
            poly = space.develop(best.params)
            doc = document.from_polygon(
                cf, spec, poly, space.validate_membership(poly), optimizer.criticality_certificate(poly)
            )
            if self.options.get('out'):
                doc.write(self.options['out'])
            if self.options.get('svg'):
                svg_writer(doc).write(self.options['svg'])
        return 0

    def _start_report(self, result):

        return {
            'start': result.start,
            'seed': result.seed,
            'converged': result.converged,
            'perimeter': result.perimeter,
            'tangency_spread': result.tangency_spread,
            'iterations': result.iterations,
            'boundary_escapes': result.boundary_escapes,
            'message': result.message,
        }
def _float(value, fmt):

    return 'none' if value is None else fmt % value

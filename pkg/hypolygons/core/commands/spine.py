import json

from .base import base
from hypolygons.construction.spine import surface_type, spine_edge_count, spine_lower_bound
def execute(options):

    obj = spine(options)
    return obj.execute()
class spine(base):
    def execute(self):
        st = surface_type(self.require('genus', '--genus'), self.require('punctures', '--punctures'))
        edges = spine_edge_count(st)
        bound = spine_lower_bound(st)

        if self.options.get('json'):
            print(json.dumps({'genus': st.genus, 'punctures': st.punctures, 'edges': edges, 'bound': bound}))
        else:
            print('edges=%d bound=%.9f' % (edges, bound))
        return 0

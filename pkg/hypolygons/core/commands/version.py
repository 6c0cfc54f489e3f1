from .base import base
import hypolygons
def execute(options):

    obj = version(options)
    return obj.execute()
class version(base):
    def execute(self):
        print('hypolygons v%s' % hypolygons.__version__)
        print('MIT License')
        return 0

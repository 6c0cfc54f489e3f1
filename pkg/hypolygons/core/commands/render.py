from .base import base
from hypolygons.formats.document import document
from hypolygons.formats.svg_writer import svg_writer
def execute(options):

    obj = render(options)
    return obj.execute()
class render(base):
    def execute(self):
        doc = document.read(self.require('input', '--in'))
        writer = svg_writer(doc)

        output = self.options.get('svg') or self.options.get('out')
        if output:
            writer.write(output)
        else:
            print(writer.render(), end='')
        return 0

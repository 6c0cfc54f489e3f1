import argparse
import logging
import sys

from .core import commands
from .core.commands.base import UsageError
from .formats.document import DocumentError
from .formats.tokens.angle_token import TokenError
from .geometry.errors import GeometryError
from .helpers.settings import SettingsSyntaxError
from .helpers.tolerances import ToleranceError

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_USAGE = 64
class ArgumentError(Exception):
    pass
class argument_parser(argparse.ArgumentParser):
    """ argparse exits on bad arguments; raise instead so main() picks the exit code. """

    def error(self, message):

        raise ArgumentError(message)
class hypolymin(object):

    command = ''
    options = {}

    def __init__(self, command, options={}):

        self.command = command if command else 'version'

        self.options = options
        if self.options.get('version'):
            self.command = 'version'

        if not commands.allowed(self.command):
            raise UsageError("Unknown command %s" % self.command)

    def execute(self):

        return commands.execute(self.command, self.options)
def build_argument_parser():

    parser = argument_parser(prog='hypolymin.py', description='Perimeter minimising polygons around a cusp, cone point or geodesic')
    parser.add_argument(
        'command',
        nargs='?',
        default='version',
        choices=sorted(commands.commands),
        help='Action to execute (default: version)'
    )
    parser.add_argument('--center', help='cusp, cone:<angle> or geodesic:<length>')
    parser.add_argument('--angles', help='Comma separated angles, in radians or as k*pi/m')
    parser.add_argument('--out', help='Where to write the polygon document')
    parser.add_argument('--svg', help='Where to write the picture')
    parser.add_argument('--in', dest='input', help='Polygon document to render')
    parser.add_argument('--starts', type=int, help='Number of random starts (default: 10)')
    parser.add_argument('--seed', type=int, default=0, help='Seed of the first start (default: 0)')
    parser.add_argument('--max-iter', dest='max_iter', type=int, help='Iteration limit of one minimisation')
    parser.add_argument('--tol-residual', dest='tol_residual', type=float, help='Closure residual tolerance')
    parser.add_argument('--tol-gradient', dest='tol_gradient', type=float, help='Projected gradient tolerance')
    parser.add_argument('--genus', type=int, help='Genus of the surface')
    parser.add_argument('--punctures', type=int, help='Number of punctures of the surface')
    parser.add_argument('--json', action='store_true', help='Print reports as JSON')
    parser.add_argument('--config', help='Location of the tolerance file (default: hypolymin.conf, optional)')
    parser.add_argument('--verbose', action='store_true', help='Log progress to stderr')
    parser.add_argument('-v', dest='version', action='store_true', help='Display version')
    return parser
def main(argv=None, environ=None):
    """ main(argv=None, environ=None)

    Runs one command and returns its exit code: 0 on success, 1 on an
    internal failure, 2 for an infeasible or invalid model and 64 for bad
    usage.  Messages go to stderr.
    """
    try:
        args = build_argument_parser().parse_args(sys.argv[1:] if argv is None else argv)
    except ArgumentError as e:
        print('usage error: %s' % e, file=sys.stderr)
        return EXIT_USAGE

    options = vars(args)
    if environ is not None:
        options['environ'] = environ

    handler = None
    if options.get('verbose'):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('%(name)s %(levelname)s %(message)s'))
        logging.getLogger('hypolygons').addHandler(handler)
        logging.getLogger('hypolygons').setLevel(logging.DEBUG)

    try:
        return hypolymin(args.command, options).execute()
    except (UsageError, TokenError, SettingsSyntaxError, ToleranceError) as e:
        print('usage error: %s' % e, file=sys.stderr)
        return EXIT_USAGE
    except (GeometryError, DocumentError) as e:
        print('%s: %s' % (e.__class__.__name__, e), file=sys.stderr)
        return EXIT_INVALID
    except Exception as e:
        print('internal error: %s: %s' % (e.__class__.__name__, e), file=sys.stderr)
        return EXIT_INTERNAL
    finally:
        if handler is not None:
            logging.getLogger('hypolygons').removeHandler(handler)
            logging.getLogger('hypolygons').setLevel(logging.NOTSET)

from hypolygons.geometry.center import make_center
from hypolygons.geometry.polygon_space import angle_spec
from hypolygons.formats.tokens.center_token import parse_center
from hypolygons.formats.tokens.angle_token import parse_angle_list
from hypolygons.helpers.tolerances import CONFIG_FILE, find_config, tolerances
class UsageError(ValueError):
    pass
class base(object):
    """ command = base(options)

    Shared setup for the commands: the tolerances layered from the config
    file, the environment and the command line, and the centre and angles
    given on the command line.
    """

    tolerances = {}

    def __init__(self, options):

        self.options = options

        config = self.options.get('config') or CONFIG_FILE
        # a config named on the command line has to exist
        if self.options.get('config'):
            find_config(config, required=True)

        self.tolerances = tolerances.from_sources(
            config=config,
            environ=self.options.get('environ'),
            overrides={
                'residual': self.options.get('tol_residual'),
                'gradient': self.options.get('tol_gradient'),
                'max_iter': self.options.get('max_iter'),
            }
        )

    def execute(self):
        raise NotImplementedError()

    def require(self, name, flag):

        value = self.options.get(name)
        if value is None or value == '':
            raise UsageError('The %s command needs %s' % (self.__class__.__name__, flag))
        return value

    def center(self):

        (kind, parameter) = parse_center(self.require('center', '--center'))
        return make_center(kind, parameter)

    def angles(self):

        return angle_spec(parse_angle_list(self.require('angles', '--angles')))

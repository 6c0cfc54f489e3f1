import os
import logging

from .settings import settings

log = logging.getLogger(__name__)

DEFAULTS = {
    'class': 1e-9,
    'iso': 1e-10,
    'residual': 1e-9,
    'search_residual': 1e-7,
    'gradient': 1e-8,
    'spread': 1e-6,
    'rank': 1e-7,
    'max_iter': 500,
    'newton_max_iter': 50,
    'newton_start': 0.5,
}

# options that count something
INTEGER_KEYS = ('max_iter', 'newton_max_iter')

CONFIG_FILE = 'hypolymin.conf'
ENVIRONMENT_VARIABLE = 'HYPOLYMIN_TOL'
class ToleranceError(ValueError):
    pass
class tolerances(dict):
    """ tol = tolerances(overrides=None)

    Numeric options shared by the polygon space, the optimizer and the
    construction.  Starts from DEFAULTS and applies ``overrides``; unknown
    keys and values that are not numbers raise ToleranceError.
    """

    def __init__(self, overrides=None):

        super().__init__(DEFAULTS)
        if overrides:
            self.update_from(overrides, 'overrides')

    def update_from(self, values, source):
        """ tol.update_from(values, source)

        Applies a mapping of options.  ``source`` names where they came from
        for error messages.
        """
        for (key, value) in values.items():
            key = str(key).strip()
            if not key in DEFAULTS:
                raise ToleranceError("Unknown tolerance '%s' in %s" % (key, source))
            self[key] = self._number(key, value, source)

    def _number(self, key, value, source):

        if isinstance(value, bool):
            raise ToleranceError("Tolerance '%s' in %s must be a number" % (key, source))
        try:
            number = float(value)
        except (TypeError, ValueError):
            raise ToleranceError("Tolerance '%s' in %s must be a number, got '%s'" % (key, source, value))
        if number != number or number <= 0:
            raise ToleranceError("Tolerance '%s' in %s must be positive, got '%s'" % (key, source, value))
        if key in INTEGER_KEYS:
            if number != int(number):
                raise ToleranceError("Tolerance '%s' in %s must be a whole number, got '%s'" % (key, source, value))
            return int(number)
        return number

    @classmethod
    def from_sources(cls, config=CONFIG_FILE, environ=None, overrides=None):
        """ tolerances.from_sources(config='hypolymin.conf', environ=None, overrides=None)

        Layers the options: defaults, then the config file (searched for in
        the working directory and its parents, skipped when absent), then the
        HYPOLYMIN_TOL environment variable, then ``overrides`` (values of None
        are ignored).

        :returns: The options
        :rtype: tolerances
        """
        tol = cls()
        environ = os.environ if environ is None else environ

        if config:
            path = find_config(config)
            if path:
                log.debug('reading tolerances from %s', path)
                tol.update_from(settings(path), path)

        raw = environ.get(ENVIRONMENT_VARIABLE, '').strip()
        if raw:
            try:
                bare = float(raw)
            except ValueError:
                tol.update_from(settings(raw), ENVIRONMENT_VARIABLE)
            else:
                tol.update_from({'residual': bare}, ENVIRONMENT_VARIABLE)

        if overrides:
            tol.update_from({key: value for (key, value) in overrides.items() if value is not None}, 'the command line')

        return tol
def find_config(file_path, required=False):
    """ find_config(file_path, required=False)

    Absolute paths are used as they are.  Relative paths are looked for in
    the current directory and then in each of its parents.

    :returns: The absolute path, or None when not found and not required
    :rtype: str
    :raises ToleranceError: when a required file cannot be found
    """
    if not file_path:
        raise ToleranceError('Missing path to config file')

    if os.path.isabs(file_path):
        if os.path.isfile(file_path):
            return file_path
        if required:
            raise ToleranceError("Specified config file '%s' does not exist" % file_path)
        return None

    directory = os.getcwd()
    while True:
        abs_path = os.path.join(directory, file_path)
        if os.path.isfile(abs_path):
            return abs_path
        parent = os.path.dirname(directory)
        if parent == directory:
            break
        directory = parent

    if required:
        raise ToleranceError("Could not find config file '%s' in current directory or parents" % file_path)
    return None

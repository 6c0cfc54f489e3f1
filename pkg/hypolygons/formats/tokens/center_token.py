from hypolygons.core.parse.parser import parser
from .angle_token import TokenError, parse_angle
class center_token(parser):
    """ token = center_token()

    A centre specification: ``cusp``, ``cone:<angle>`` or
    ``geodesic:<length>``, where the parameter accepts the angle syntax.
    """

    rules = [{
        'type': 'regexp',
        'value': r'(cusp|cone|geodesic)\b',
        'name': 'kind'
    }, {
        'type': 'literal',
        'value': ':',
        'optional': True
    }, {
        'type': 'regexp',
        'value': r'.+',
        'name': 'parameter',
        'optional': True
    }]

    def __init__(self):

        super().__init__()

        self._errors = []
        self.kind = None
        self.parameter = None

    @property
    def errors(self):

        return list(self._errors)

    def parse(self, string=''):

        self._errors = []
        self.kind = None
        self.parameter = None
        leftovers = super().parse(string)
        if not self.matched:
            self._errors.append("Unknown centre '%s': expected cusp, cone:<angle> or geodesic:<length>" % string)
        elif leftovers:
            self._errors.append("Unexpected '%s' in centre '%s'" % (leftovers, string))
        return leftovers

    def process(self):

        self.kind = self['kind'].lower()
        has_parameter = 'parameter' in self
        if has_parameter and not ':' in self:
            self._errors.append("Separate the %s parameter with ':'" % self.kind)
            return
        if ':' in self and not has_parameter:
            self._errors.append("Missing %s parameter after ':'" % self.kind)
            return
        if self.kind == 'cusp' and has_parameter:
            self._errors.append('A cusp takes no parameter')
            return
        if self.kind != 'cusp' and not has_parameter:
            self._errors.append('A %s needs a parameter' % self.kind)
            return
        if has_parameter:
            try:
                self.parameter = parse_angle(self['parameter'])
            except TokenError as e:
                self._errors.append('Bad %s parameter: %s' % (self.kind, e))
def parse_center(text):
    """ parse_center(text)

    :returns: (kind, parameter), the parameter being None for a cusp
    :rtype: tuple
    :raises TokenError: when the text is not a centre specification
    """
    token = center_token()
    token.parse(text or '')
    if token.errors:
        raise TokenError('; '.join(token.errors))
    return (token.kind, token.parameter)

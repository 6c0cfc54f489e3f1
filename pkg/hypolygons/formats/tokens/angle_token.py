import math

from hypolygons.core.parse.parser import parser
class TokenError(ValueError):
    pass
class angle_token(parser):
    """ token = angle_token()

    An angle written as a decimal number or a rational multiple of pi:
    ``1.5``, ``pi``, ``-pi/2``, ``2*pi/3``, ``3pi/4``, ``1/3``.
    """

    rules = [{
        'type': 'regexp',
        'value': r'[+-]',
        'name': 'sign',
        'optional': True
    }, {
        'type': 'regexp',
        'value': r'(?:\d+\.?\d*|\.\d+)(?:e[+-]?\d+)?',
        'name': 'coefficient',
        'optional': True
    }, {
        'type': 'literal',
        'value': '*',
        'optional': True
    }, {
        'type': 'literal',
        'value': 'pi',
        'optional': True
    }, {
        'type': 'literal',
        'value': '/',
        'optional': True
    }, {
        'type': 'regexp',
        'value': r'\d+\.?\d*',
        'name': 'denominator',
        'optional': True
    }]

    def __init__(self):

        super().__init__()

        self._errors = []
        self.value = None

    @property
    def errors(self):

        return list(self._errors)

    def parse(self, string=''):

        self._errors = []
        self.value = None
        self.text = string
        leftovers = super().parse(string)
        if leftovers:
            self._errors.append("Unexpected '%s' in angle '%s'" % (leftovers, string.strip()))
        elif not self.matched:
            self._errors.append("Cannot read angle '%s'" % string.strip())
        if self._errors:
            self.value = None
        return leftovers

    def process(self):

        if not 'coefficient' in self and not 'pi' in self:
            self._errors.append("Angle '%s' has neither a number nor pi" % self.text.strip())
            return
        if '*' in self and not ('coefficient' in self and 'pi' in self):
            self._errors.append("'*' in angle '%s' must sit between a number and pi" % self.text.strip())
            return
        if ('/' in self) != ('denominator' in self):
            self._errors.append("Angle '%s' has an incomplete fraction" % self.text.strip())
            return

        value = float(self['coefficient']) if 'coefficient' in self else 1.0
        if 'pi' in self:
            value *= math.pi
        if 'denominator' in self:
            denominator = float(self['denominator'])
            if denominator == 0:
                self._errors.append("Angle '%s' divides by zero" % self.text.strip())
                return
            value /= denominator
        if self.get_sign() < 0:
            value = -value
        self.value = value

    def get_sign(self):

        return -1 if '-' == self._values.get('sign') else 1
def parse_angle(text):
    """ parse_angle(text)

    :returns: The angle in radians
    :rtype: float
    :raises TokenError: when the text is not an angle
    """
    token = angle_token()
    token.parse(text)
    if token.errors:
        raise TokenError('; '.join(token.errors))
    return token.value
def parse_angle_list(text):
    """ parse_angle_list(text)

    Reads a comma separated list of angle tokens, e.g. ``2*pi/3,pi/2,1.2``.

    :returns: The angles in radians
    :rtype: list
    :raises TokenError: on an empty list or any unreadable angle
    """
    if text is None or not str(text).strip():
        raise TokenError('No angles given')

    angles = []
    errors = []
    for (index, part) in enumerate(str(text).split(',')):
        try:
            angles.append(parse_angle(part))
        except TokenError as e:
            errors.append('angle %d: %s' % (index + 1, e))
    if errors:
        raise TokenError('; '.join(errors))
    return angles

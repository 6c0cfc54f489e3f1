import re

from .rule_literal import rule_literal
from .rule_regexp import rule_regexp
class parser(object):
    """ token = parser(rules=[])

    Matches a list of rules, in order, against the start of a string.  Each
    matched rule stores its result under its name, and ``process()`` is
    called once every required rule has matched so that subclasses can turn
    the raw matches into values.

    After ``parse()``:

    ===========  =============================================
    Attribute    Meaning
    ===========  =============================================
    matched      True when every required rule matched
    leftovers    What the rules did not consume
    ===========  =============================================
    """

    rule_types = {
        'literal': rule_literal,
        'regexp': rule_regexp,
    }

    rules = []

    def __init__(self, rules=[]):

        self._values = {}
        self.matched = False
        self.leftovers = ''

        if rules:
            self.rules = rules

        if not self.rules:
            raise NotImplementedError("Cannot extend parser without providing rules in %s" % (self.__class__))

        for rule in self.rules:
            if not 'type' in rule:
                raise ValueError('Missing type for rule %s in %s' % (rule, self.__class__))

        self.num_rules = len(self.rules)

    def __getitem__(self, key):

        return self._values[key]

    def __contains__(self, key):

        return key in self._values

    def __len__(self):

        return len(self._values)

    def keys(self):

        return self._values.keys()

    def items(self):

        return self._values.items()

    def get_rule_parser(self, rule):

        rule_type = rule['type']
        if not rule_type in self.rule_types:
            raise ValueError('Unknown rule type %s for class %s' % (rule_type, self.__class__))

        return self.rule_types[rule_type](self, rule)

    def parse(self, string=''):
        """ token.parse(string)

        Runs the rules against the string with all whitespace removed and
        returns the part that was not consumed.
        """
        string = re.sub(r'\s+', '', string)
        self._values = {}

        rule_index = -1
        for (rule_index, rule) in enumerate(self.rules):

            if not string:
                rule_index -= 1
                break

            rule_parser = self.get_rule_parser(rule)
            if not rule_parser.parse(string):
                if not rule.get('optional'):
                    self.matched = False
                    self.leftovers = string
                    return string
                continue

            self._values[rule_parser.name] = rule_parser.result
            string = rule_parser.leftovers

        # anything required after the last rule we reached is missing
        for rule in self.rules[rule_index + 1:]:
            if not rule.get('optional'):
                self.matched = False
                self.leftovers = string
                return string

        self.leftovers = string
        self.matched = True
        self.process()
        return string

    def process(self):
        """ token.process()

        Turns the matched values into attributes.  Only called on a match.
        """

        pass

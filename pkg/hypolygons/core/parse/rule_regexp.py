import re

from .rule_base import rule_base
class rule_regexp(rule_base):
    """ rule = rule_regexp(parser, rule)

    Matches a regular expression (case-insensitive) at the start of the
    string.  When the expression has a group only the first group is kept as
    the result.
    """

    def __init__(self, parser, rule):

        super().__init__(parser, rule)

        self.regexp = re.compile(self.rule['value'], re.IGNORECASE)

    def parse(self, string):

        match = self.regexp.match(string)
        if not match or not match.group(0):
            return self._no_match(string)

        self.leftovers = string[match.end():]
        self.result = match.group(1) if match.groups() else match.group(0)
        return True

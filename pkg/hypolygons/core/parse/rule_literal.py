from .rule_base import rule_base
class rule_literal(rule_base):
    """ rule = rule_literal(parser, rule)

    Matches a literal piece of text, ignoring case.  The literal doubles as
    the name when none is given.
    """

    require_name = False

    def __init__(self, parser, rule):

        super().__init__(parser, rule)

        self.literal = self.rule['value']
        if not self.name:
            self.name = self.literal

    def parse(self, string):

        size = len(self.literal)
        if string[:size].lower() != self.literal.lower():
            return self._no_match(string)

        self.leftovers = string[size:]
        self.result = self.literal
        return True

class rule_base(object):
    """ rule = rule_base(parser, rule)

    Base class for the rules a parser is made of.  Every rule only looks at
    the start of the string it is given:

    ================  ===================================
    Class             Description
    ================  ===================================
    rule_literal      Matches a fixed piece of text
    rule_regexp       Matches a regular expression
    ================  ===================================

    keys shared by every rule configuration:

    =========  ========
    key        contents
    =========  ========
    type       literal or regexp
    value      What to match
    name       The key the match is stored under
    optional   (optional) If true the parser moves on when the rule fails
    =========  ========
    """

    require_name = True

    def __init__(self, parser, rule):
        """ rule = rule_base(parser, rule)

        :param parser: The parser that this rule belongs to
        :param rule: The rule configuration
        :type rule: dict
        """

        self.parser_class = parser.__class__
        self.rule = rule
        self.result = ''
        self.leftovers = ''

        self.name = self.rule.get('name', '')
        if self.require_name and not self.name:
            raise ValueError("name required for rule %s in class %s" % (self.rule, self.parser_class))

        if not self.rule.get('value'):
            raise ValueError('missing value in rule %s for class %s' % (self.rule, self.parser_class))

    def parse(self, string):
        """ rule.parse(string)

        Matches the start of string.  Sets ``result`` and ``leftovers`` and
        returns whether it matched.

        :param string: The string to parse
        :type string: str
        :returns: boolean
        """

        raise NotImplementedError("%s does not implement parse" % self.__class__)

    def _no_match(self, string):

        self.result = ''
        self.leftovers = string
        return False

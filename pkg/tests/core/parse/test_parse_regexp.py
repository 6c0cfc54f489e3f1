import unittest

from hypolygons.core.parse.rule_regexp import rule_regexp
class test_parse_regexp(unittest.TestCase):
    def get_rule(self, name, regexp):

        return rule_regexp(False, {'name': name, 'value': regexp})

    def test_name_required(self):

        with self.assertRaises(ValueError):

            self.get_rule('', '\\d+')

    def test_value_required(self):

        with self.assertRaises(ValueError):

            self.get_rule('bob', '')

    def test_can_init_with_name_and_value(self):

        rule = self.get_rule('bob', '\\S+')
        self.assertEqual(rule.name, 'bob')
        self.assertEqual(rule.regexp.pattern, '\\S+')

    def test_match_beginning_only(self):

        rule = self.get_rule('bob', '\\d+')
        self.assertFalse(rule.parse('pi/3'))
        self.assertEqual('', rule.result)

    def test_leftovers_is_input_for_no_match(self):

        rule = self.get_rule('bob', '\\d+')
        string = 'pi/3'
        rule.parse(string)

        self.assertEqual(string, rule.leftovers)

    def test_no_leftovers_for_full_match(self):

        rule = self.get_rule('bob', '\\d+')
        string = '23483438'

        self.assertTrue(rule.parse(string))
        self.assertEqual(string, rule.result)
        self.assertEqual('', rule.leftovers)

    def test_return_group_only(self):

        rule = self.get_rule('kind', '(cone|cusp)\\b')

        self.assertTrue(rule.parse('cone:pi'))
        self.assertEqual('cone', rule.result)
        self.assertEqual(':pi', rule.leftovers)

    def test_ignore_case(self):

        rule = self.get_rule('kind', '(cusp)')

        self.assertTrue(rule.parse('CUSP'))
        self.assertEqual('CUSP', rule.result)

    def test_empty_match_is_no_match(self):

        # an expression that can match nothing must not count as a match
        rule = self.get_rule('bob', '\\d*')

        self.assertFalse(rule.parse('pi'))
        self.assertEqual('pi', rule.leftovers)

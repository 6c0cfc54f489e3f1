import io
import os
import re

import json
from json import JSONDecodeError
class SettingsSyntaxError(Exception):
    pass
class settings(dict):
    """ config = settings(source='', comment='#')

    Reads ``key = value`` settings from a string, a filename, a file object
    or a stream.  JSON objects are accepted as they are.  Otherwise settings
    are separated by newlines or commas, keys and values by ``=`` or ``:``,
    and anything after the comment character is ignored unless quoted.
    """

    raw_contents = ''

    def __init__(self, source='', comment='#'):

        if source:
            self.raw_contents = self.get_contents(source)
            parsed = self.parse(self.raw_contents, comment)
        else:
            self.raw_contents = ''
            parsed = {}

        super().__init__(parsed)

    def get_contents(self, source):

        if isinstance(source, io.IOBase):
            contents = source.read()

        elif isinstance(source, str):
            if os.path.isfile(source):
                with open(source, 'r', encoding='utf-8') as fp:
                    contents = fp.read()
            else:
                contents = source

        else:
            raise ValueError("Unknown type for settings: must be a string, a filename, file pointer, or StringIO")

        try:
            contents = contents.decode('utf-8')
        except AttributeError:
            pass

        return contents

    def parse(self, string, comment='#'):

        stripped = string.strip()
        if stripped[:1] == '{':
            try:
                parsed = json.loads(stripped)
            except JSONDecodeError as e:
                raise SettingsSyntaxError('Syntax error: invalid JSON settings: %s' % e)
            if not isinstance(parsed, dict):
                raise SettingsSyntaxError('Syntax error: JSON settings must be an object')
            return parsed

        configs = {}
        for line in string.split("\n"):
            for entry in self.split_entries(line, comment):
                [key, value] = self.parse_line(entry, comment)
                if not key:
                    continue
                configs[key] = value

        return configs

    def split_entries(self, line, comment):
        """ config.split_entries(line, comment)

        Splits a line on the commas outside quotes, stopping at a comment.
        """
        entries = []
        current = ''
        quote = ''
        for (index, char) in enumerate(line):
            if quote:
                current += char
                if char == quote and line[index - 1] != '\\':
                    quote = ''
                continue
            if char in ('"', "'"):
                quote = char
            elif line[index:index + len(comment)] == comment:
                current += line[index:]
                break
            elif char == ',':
                entries.append(current)
                current = ''
                continue
            current += char
        entries.append(current)
        return entries

    def parse_line(self, line, comment):

        clean = line.strip()

        # comments and blank entries
        if clean[:len(comment)] == comment or not clean:
            return [False, False]

        match = re.match('^([^=:]+)[=:](.*)', clean)
        if not match:
            raise SettingsSyntaxError("Syntax error: no setting found in '%s'" % line.strip())

        key = match.group(1).strip()
        value = match.group(2).strip()

        if not value:
            return [key, '']

        if value[0] != "'" and value[0] != '"':
            if value.count(comment):
                value = value[:value.index(comment)].strip()

            if value.count('"') or value.count("'"):
                raise SettingsSyntaxError("Syntax error: unclosed quote in '%s'" % line.strip())

            return [key, value]

        quote = value[0]
        value = value[1:]

        if not value.count(quote):
            raise SettingsSyntaxError("Syntax error: unclosed quote in '%s'" % line.strip())

        if value[0] == quote:
            return [key, '']

        index = value.find(quote, 1)
        while index >= 0:
            if value[index - 1] == "\\":
                index = value.find(quote, index + 1)
                continue

            if value.count(comment, index):
                value = value[:value.index(comment, index)].strip()

            if len(value) > index + 1 and value[index + 1:].strip() != ';':
                raise SettingsSyntaxError("Syntax error: data found outside of the quote in '%s'" % line.strip())

            return [key, value[:index].replace('\\%s' % quote, quote)]

        raise SettingsSyntaxError("Syntax error: unclosed quote in '%s'" % line.strip())

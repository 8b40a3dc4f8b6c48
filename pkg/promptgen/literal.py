"""Parser for the value-literal grammar that ``render_value`` produces.

    value   = STRING | NUMBER | list | dict | object | enum
            | "True" | "False" | "true" | "false" | "None" ;
    list    = "[" [ value { "," value } [ "," ] ] "]" ;
    dict    = "{" [ STRING ":" value { "," STRING ":" value } [ "," ] ] "}" ;
    object  = NAME "(" [ NAME "=" value { "," NAME "=" value } [ "," ] ] ")" ;
    enum    = NAME "." NAME ;
"""
import re

from .exceptions import ResponseParseError
from .values import (
    NONE,
    Bool,
    DictValue,
    EnumValue,
    Float,
    Int,
    ListValue,
    ObjectValue,
    Str,
)

TOKEN_PATTERN = re.compile(r'''
    (?P<space>\s+)
  | (?P<string>'(?:[^'\\]|\\.)*'|"(?:[^"\\]|\\.)*")
  | (?P<number>-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[\[\]{}(),:=.])
''', re.VERBOSE | re.DOTALL)

ESCAPE_PATTERN = re.compile(r'\\(x[0-9a-fA-F]{2}|u[0-9a-fA-F]{4}|.)', re.DOTALL)

SIMPLE_ESCAPES = {
    '\\': '\\',
    "'": "'",
    '"': '"',
    'n': '\n',
    'r': '\r',
    't': '\t',
    '0': '\0',
}

CONSTANTS = {
    'True': Bool(True),
    'true': Bool(True),
    'False': Bool(False),
    'false': Bool(False),
    'None': NONE,
}

END = 'end'


def _unescape(body, position):
    def replace(match):
        escape = match.group(1)
        if escape in SIMPLE_ESCAPES:
            return SIMPLE_ESCAPES[escape]
        if escape[0] in 'xu' and len(escape) > 1:
            return chr(int(escape[1:], 16))
        raise ResponseParseError('invalid escape \\{} in string'.format(escape), position)
    return ESCAPE_PATTERN.sub(replace, body)


def _tokens(text):
    pos = 0
    while pos < len(text):
        match = TOKEN_PATTERN.match(text, pos)
        if match is None:
            raise ResponseParseError('unexpected character {!r}'.format(text[pos]), pos)
        if match.lastgroup != 'space':
            yield match.lastgroup, match.group(), pos
        pos = match.end()
    yield END, '', pos


class LiteralParser:

    def __init__(self, text):
        self.tokens = list(_tokens(text))
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.current
        if token[0] != END:
            self.pos += 1
        return token

    def accept(self, text):
        if self.current[0] == 'punct' and self.current[1] == text:
            return self.advance()
        return None

    def expect(self, text):
        token = self.accept(text)
        if token is None:
            self.fail(repr(text))
        return token

    def fail(self, expected):
        kind, text, position = self.current
        found = 'end of input' if kind == END else repr(text)
        raise ResponseParseError('expected {}, found {}'.format(expected, found), position)

    def parse(self):
        value = self.value()
        if self.current[0] != END:
            self.fail('end of input')
        return value

    def value(self):
        kind, text, position = self.current
        if kind == 'string':
            self.advance()
            return Str(_unescape(text[1:-1], position))
        if kind == 'number':
            self.advance()
            if any(char in text for char in '.eE'):
                return Float(float(text))
            return Int(int(text))
        if kind == 'name':
            return self.named()
        if self.accept('['):
            return ListValue(tuple(self.sequence(']', self.value)))
        if self.accept('{'):
            return DictValue(tuple(self.sequence('}', self.dict_item)))
        self.fail('a value')

    def sequence(self, close, item):
        items = []
        while not self.accept(close):
            items.append(item())
            if not self.accept(','):
                self.expect(close)
                break
        return items

    def dict_item(self):
        kind, text, position = self.current
        if kind != 'string':
            self.fail('a string key')
        self.advance()
        self.expect(':')
        return _unescape(text[1:-1], position), self.value()

    def named(self):
        _, name, _ = self.advance()
        if self.accept('('):
            return ObjectValue(name, tuple(self.sequence(')', self.keyword_argument)))
        if self.accept('.'):
            kind, variant, _ = self.current
            if kind != 'name':
                self.fail('a variant name')
            self.advance()
            return EnumValue(name, variant)
        if name in CONSTANTS:
            return CONSTANTS[name]
        self.pos -= 1
        self.fail("'(' or '.' after a name")

    def keyword_argument(self):
        kind, name, _ = self.current
        if kind != 'name':
            self.fail('a field name')
        self.advance()
        self.expect('=')
        return name, self.value()


def parse_literal(text):
    """Parse one value literal spanning the whole of ``text``."""
    return LiteralParser(text).parse()

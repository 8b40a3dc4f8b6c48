import logging
import re
from itertools import accumulate
from dataclasses import dataclass
from typing import Optional

from . import (
    END_OF_INPUT,
    FLOAT,
    IDENTIFIER,
    INT,
    KEYWORD,
    KEYWORDS,
    PUNCTUATION,
    STRING,
    STRING_ESCAPES,
)
from .exceptions import LexError
from .nodes import Span

logger = logging.getLogger(__name__)

TOKEN_PATTERN = re.compile(r'''
    (?P<newline>\n)
  | (?P<skip>[ \t\r\f]+)
  | (?P<comment>\#[^\n]*)
  | (?P<float>\d+\.\d+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<quote>")
  | (?P<punct>->|\.\.\.|[{}()\[\],:;=.+\-*/%<>!&|^~?@])
''', re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    span: Span
    # Unescaped payload for strings, numeric value for numbers
    value: Optional[object] = None

    def is_(self, kind, text=None):
        return self.kind == kind and (text is None or self.text == text)

    def describe(self):
        if self.kind == END_OF_INPUT:
            return 'end of input'
        return repr(self.text)


class _Scanner:

    def __init__(self, source):
        self.source = source
        self.pos = 0
        self.line = 1
        self.line_start = 0
        # UTF-8 byte offset of every character index, plus one past the end
        self.offsets = [0, *accumulate(len(char.encode('utf-8')) for char in source)]

    def span(self, start, end, line=None, line_start=None):
        """Span over characters ``start:end``; the range is in bytes, the column in characters."""
        line = self.line if line is None else line
        line_start = self.line_start if line_start is None else line_start
        return Span(line, start - line_start + 1, self.offsets[start], self.offsets[end])

    def tokens(self):
        source = self.source
        while self.pos < len(source):
            match = TOKEN_PATTERN.match(source, self.pos)
            if match is None:
                raise LexError(
                    'illegal character {!r}'.format(source[self.pos]),
                    self.span(self.pos, self.pos + 1),
                )
            group = match.lastgroup
            start, end = match.span()
            if group == 'newline':
                self.pos = end
                self.line += 1
                self.line_start = end
                continue
            if group in ('skip', 'comment'):
                self.pos = end
                continue
            if group == 'quote':
                yield self.string()
                continue
            text = match.group()
            self.pos = end
            if group == 'float':
                yield Token(FLOAT, text, self.span(start, end), float(text))
            elif group == 'int':
                yield Token(INT, text, self.span(start, end), int(text))
            elif group == 'name':
                yield Token(KEYWORD if text in KEYWORDS else IDENTIFIER, text, self.span(start, end))
            else:
                yield Token(PUNCTUATION, text, self.span(start, end))
        yield Token(END_OF_INPUT, '', self.span(self.pos, self.pos))

    def string(self):
        source = self.source
        start, line, line_start = self.pos, self.line, self.line_start
        payload = []
        pos = start + 1
        while True:
            if pos >= len(source):
                raise LexError('unterminated string literal', self.span(start, len(source), line, line_start))
            char = source[pos]
            if char == '"':
                pos += 1
                break
            if char == '\\':
                escape = source[pos + 1:pos + 2]
                if escape not in STRING_ESCAPES:
                    raise LexError(
                        'invalid escape sequence {!r}'.format('\\' + escape),
                        self.span(pos, min(pos + 2, len(source))),
                    )
                payload.append(STRING_ESCAPES[escape])
                pos += 2
                continue
            if char == '\n':
                self.line += 1
                self.line_start = pos + 1
            payload.append(char)
            pos += 1
        self.pos = pos
        span = self.span(start, pos, line, line_start)
        return Token(STRING, source[start:pos], span, ''.join(payload))


def tokenize(source):
    """Split MTL source into tokens, ending with an end-of-input token.

    Comments and whitespace are dropped. Raises LexError on an unterminated
    string, an unsupported escape or a character outside the alphabet.
    """
    tokens = list(_Scanner(source).tokens())
    logger.debug('tokenized %d tokens', len(tokens))
    return tokens

"""Runtime values bound to call-site arguments and parsed from responses."""
from dataclasses import dataclass
from typing import Tuple

from frontend.nodes import (
    LITERAL_BOOL,
    LITERAL_FLOAT,
    LITERAL_INT,
    LITERAL_LIST,
    LITERAL_NONE,
    LITERAL_STR,
)


@dataclass(frozen=True)
class Str:
    value: str


@dataclass(frozen=True)
class Int:
    value: int


@dataclass(frozen=True)
class Float:
    value: float


@dataclass(frozen=True)
class Bool:
    value: bool


@dataclass(frozen=True)
class NoneValue:
    pass


NONE = NoneValue()


@dataclass(frozen=True)
class ListValue:
    items: Tuple[object, ...] = ()


@dataclass(frozen=True)
class DictValue:
    # (key, value) pairs in insertion order
    items: Tuple[Tuple[str, object], ...] = ()


@dataclass(frozen=True)
class EnumValue:
    enum: str
    variant: str


@dataclass(frozen=True)
class ObjectValue:
    cls: str
    # (attribute, value) pairs in declaration order
    fields: Tuple[Tuple[str, object], ...] = ()

    def field(self, name):
        return dict(self.fields)[name]


def literal_value(literal):
    """RuntimeValue of a declared default literal."""
    if literal.kind == LITERAL_STR:
        return Str(literal.value)
    if literal.kind == LITERAL_INT:
        return Int(literal.value)
    if literal.kind == LITERAL_FLOAT:
        return Float(literal.value)
    if literal.kind == LITERAL_BOOL:
        return Bool(literal.value)
    if literal.kind == LITERAL_NONE:
        return NONE
    if literal.kind == LITERAL_LIST:
        return ListValue()
    raise ValueError('unknown literal kind {!r}'.format(literal.kind))


STRING_ESCAPES = {
    '\\': '\\\\',
    "'": "\\'",
    '\n': '\\n',
    '\r': '\\r',
    '\t': '\\t',
}


def render_string(text):
    chars = []
    for char in text:
        if char in STRING_ESCAPES:
            chars.append(STRING_ESCAPES[char])
        elif ord(char) < 0x20 or ord(char) == 0x7f:
            chars.append('\\x{:02x}'.format(ord(char)))
        else:
            chars.append(char)
    return "'{}'".format(''.join(chars))


def render_value(value):
    """Constructor-syntax text of ``value`` on a single line."""
    if isinstance(value, Str):
        return render_string(value.value)
    if isinstance(value, Bool):
        return 'True' if value.value else 'False'
    if isinstance(value, (Int, Float)):
        return repr(value.value)
    if isinstance(value, NoneValue):
        return 'None'
    if isinstance(value, ListValue):
        return '[{}]'.format(', '.join(render_value(item) for item in value.items))
    if isinstance(value, DictValue):
        return '{{{}}}'.format(', '.join(
            '{}: {}'.format(render_string(key), render_value(item)) for key, item in value.items))
    if isinstance(value, EnumValue):
        return '{}.{}'.format(value.enum, value.variant)
    if isinstance(value, ObjectValue):
        return '{}({})'.format(value.cls, ', '.join(
            '{} = {}'.format(name, render_value(item)) for name, item in value.fields))
    raise TypeError('not a runtime value: {!r}'.format(value))

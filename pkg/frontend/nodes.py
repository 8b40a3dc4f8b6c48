"""AST for MTL programs.

Nodes are frozen dataclasses. Spans never take part in equality or hashing,
so two parses of equivalent source compare equal and type expressions can be
used directly as dictionary keys.
"""
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Optional, Tuple, Union

from . import GENERIC_ARITY, PRIMITIVE_TYPES, STRING_ESCAPES


def _span():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Span:
    line: int
    # Column counts characters; start and end are UTF-8 byte offsets
    column: int
    start: int
    end: int

    def to(self, other):
        """Span running from the start of ``self`` to the end of ``other``."""
        return Span(self.line, self.column, self.start, other.end)

    def contains(self, other):
        return self.start <= other.start and other.end <= self.end


@dataclass(frozen=True)
class NamedType:
    name: str
    span: Optional[Span] = _span()

    @property
    def is_primitive(self):
        return self.name in PRIMITIVE_TYPES

    @property
    def args(self):
        return ()

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class GenericType:
    name: str
    args: Tuple['TypeExpr', ...]
    span: Optional[Span] = _span()

    @property
    def is_primitive(self):
        return False

    @property
    def arity(self):
        return GENERIC_ARITY[self.name]

    def __str__(self):
        return '{}[{}]'.format(self.name, ', '.join(str(arg) for arg in self.args))


TypeExpr = Union[NamedType, GenericType]


def named_types(type_expr):
    """Every NamedType occurring in ``type_expr``, outermost first."""
    if isinstance(type_expr, GenericType):
        for arg in type_expr.args:
            yield from named_types(arg)
    else:
        yield type_expr


# Literal kinds
LITERAL_STR = 'str'
LITERAL_INT = 'int'
LITERAL_FLOAT = 'float'
LITERAL_BOOL = 'bool'
LITERAL_NONE = 'none'
LITERAL_LIST = 'list'


def quote(text):
    """Double-quoted MTL string literal for ``text``."""
    reverse = {value: key for key, value in STRING_ESCAPES.items()}
    return '"{}"'.format(''.join('\\' + reverse[char] if char in reverse else char for char in text))


def format_float(value):
    """Positional text for ``value``; MTL float literals have no exponent."""
    text = format(Decimal(repr(value)), 'f')
    return text if '.' in text else text + '.0'


@dataclass(frozen=True)
class Literal:
    kind: str
    value: object
    span: Optional[Span] = _span()

    def __str__(self):
        if self.kind == LITERAL_STR:
            return quote(self.value)
        if self.kind == LITERAL_BOOL:
            return 'true' if self.value else 'false'
        if self.kind == LITERAL_NONE:
            return 'None'
        if self.kind == LITERAL_LIST:
            return '[]'
        if self.kind == LITERAL_FLOAT:
            return format_float(self.value)
        return repr(self.value)


@dataclass(frozen=True)
class Param:
    name: str
    type: TypeExpr
    default: Optional[Literal] = None
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class AttrDecl:
    name: str
    type: TypeExpr
    default: Optional[Literal] = None
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class ByLlm:
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class OpaqueBody:
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class FuncDecl:
    name: str
    params: Tuple[Param, ...]
    return_type: TypeExpr
    body: Union[ByLlm, OpaqueBody]
    docstring: Optional[str] = None
    span: Optional[Span] = _span()

    @property
    def is_by_llm(self):
        return isinstance(self.body, ByLlm)


@dataclass(frozen=True)
class ClassDecl:
    name: str
    attrs: Tuple[AttrDecl, ...]
    methods: Tuple[FuncDecl, ...]
    docstring: Optional[str] = None
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class EnumVariant:
    name: str
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class EnumDecl:
    name: str
    variants: Tuple[EnumVariant, ...]
    docstring: Optional[str] = None
    span: Optional[Span] = _span()

    @property
    def variant_names(self):
        return tuple(variant.name for variant in self.variants)


@dataclass(frozen=True)
class SemDecl:
    target_path: Tuple[str, ...]
    text: str
    span: Optional[Span] = _span()

    @property
    def target(self):
        return '.'.join(self.target_path)


@dataclass(frozen=True)
class GlobalDecl:
    name: str
    type: TypeExpr
    span: Optional[Span] = _span()


Declaration = Union[ClassDecl, EnumDecl, FuncDecl, SemDecl, GlobalDecl]


@dataclass(frozen=True)
class SourceProgram:
    declarations: Tuple[Declaration, ...]
    span: Optional[Span] = _span()

    def _of(self, node_class):
        return tuple(decl for decl in self.declarations if isinstance(decl, node_class))

    @property
    def classes(self):
        return self._of(ClassDecl)

    @property
    def enums(self):
        return self._of(EnumDecl)

    @property
    def functions(self):
        return self._of(FuncDecl)

    @property
    def sems(self):
        return self._of(SemDecl)

    @property
    def globals(self):
        return self._of(GlobalDecl)

    @property
    def type_declarations(self):
        """Declared class and enum names mapped to their declarations."""
        return {decl.name: decl for decl in self.declarations if isinstance(decl, (ClassDecl, EnumDecl))}

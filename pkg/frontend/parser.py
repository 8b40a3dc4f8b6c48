import inspect
import logging

from . import (
    DECLARATION_KEYWORDS,
    END_OF_INPUT,
    FLOAT,
    GENERIC_ARITY,
    IDENTIFIER,
    INT,
    KEYWORD,
    PUNCTUATION,
    STRING,
)
from .exceptions import ArityError, CallsiteError, MtlSyntaxError
from .lexer import tokenize
from .nodes import (
    AttrDecl,
    ByLlm,
    ClassDecl,
    EnumDecl,
    EnumVariant,
    FuncDecl,
    GenericType,
    GlobalDecl,
    Literal,
    LITERAL_BOOL,
    LITERAL_FLOAT,
    LITERAL_INT,
    LITERAL_LIST,
    LITERAL_NONE,
    LITERAL_STR,
    NamedType,
    OpaqueBody,
    Param,
    SemDecl,
    SourceProgram,
    Span,
)

logger = logging.getLogger(__name__)


def _describe_expected(kind, text):
    if text is not None:
        return repr(text)
    return kind


class Parser:
    """Recursive-descent parser over a token list; stops at the first error."""

    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.current
        if token.kind != END_OF_INPUT:
            self.pos += 1
        return token

    def check(self, kind, text=None):
        return self.current.is_(kind, text)

    def accept(self, kind, text=None):
        if self.check(kind, text):
            return self.advance()
        return None

    def expect(self, kind, text=None):
        if self.check(kind, text):
            return self.advance()
        self.fail([_describe_expected(kind, text)])

    def fail(self, expected):
        token = self.current
        raise MtlSyntaxError(
            'expected {}, found {}'.format(' or '.join(sorted(expected)), token.describe()),
            token.span,
            expected,
        )

    def previous_span(self):
        return self.tokens[self.pos - 1].span

    # program = { class_decl | enum_decl | func_decl | sem_decl | global_decl } ;
    def parse_program(self):
        declarations = []
        while not self.check(END_OF_INPUT):
            if self.check(KEYWORD, 'class'):
                declarations.append(self.parse_class())
            elif self.check(KEYWORD, 'enum'):
                declarations.append(self.parse_enum())
            elif self.check(KEYWORD, 'def'):
                declarations.append(self.parse_function())
            elif self.check(KEYWORD, 'sem'):
                declarations.append(self.parse_sem())
            elif self.check(KEYWORD, 'let'):
                declarations.append(self.parse_global())
            else:
                self.fail([repr(keyword) for keyword in DECLARATION_KEYWORDS] + ['end of input'])
        end = self.current.span
        span = Span(1, 1, 0, end.end)
        logger.debug('parsed %d declarations', len(declarations))
        return SourceProgram(tuple(declarations), span)

    def parse_docstring(self):
        token = self.accept(STRING)
        if token is None:
            return None
        return inspect.cleandoc(token.value)

    # class_decl = "class" IDENT "{" [ STRING ] { attr_decl | func_decl } "}" ;
    def parse_class(self):
        start = self.expect(KEYWORD, 'class').span
        name = self.expect(IDENTIFIER).text
        self.expect(PUNCTUATION, '{')
        docstring = self.parse_docstring()
        attrs, methods = [], []
        while not self.check(PUNCTUATION, '}'):
            if self.check(KEYWORD, 'def'):
                methods.append(self.parse_function())
            elif self.check(IDENTIFIER):
                attrs.append(self.parse_attr())
            else:
                self.fail(['identifier', "'def'", "'}'"])
        end = self.expect(PUNCTUATION, '}').span
        return ClassDecl(name, tuple(attrs), tuple(methods), docstring, start.to(end))

    # attr_decl = IDENT ":" type_expr [ "=" literal ] ";" ;
    def parse_attr(self):
        token = self.expect(IDENTIFIER)
        self.expect(PUNCTUATION, ':')
        type_expr = self.parse_type()
        default = self.parse_literal() if self.accept(PUNCTUATION, '=') else None
        end = self.expect(PUNCTUATION, ';').span
        return AttrDecl(token.text, type_expr, default, token.span.to(end))

    # enum_decl = "enum" IDENT "{" [ STRING ] IDENT { "," IDENT } "}" ;
    def parse_enum(self):
        start = self.expect(KEYWORD, 'enum').span
        name = self.expect(IDENTIFIER).text
        self.expect(PUNCTUATION, '{')
        docstring = self.parse_docstring()
        variants = [self.parse_variant()]
        while self.accept(PUNCTUATION, ','):
            variants.append(self.parse_variant())
        end = self.expect(PUNCTUATION, '}').span
        return EnumDecl(name, tuple(variants), docstring, start.to(end))

    def parse_variant(self):
        token = self.expect(IDENTIFIER)
        return EnumVariant(token.text, token.span)

    # func_decl = "def" IDENT "(" [ param { "," param } ] ")" "->" type_expr
    #             ( "by" "llm" [ STRING ] ";" | opaque_block ) ;
    def parse_function(self):
        start = self.expect(KEYWORD, 'def').span
        name = self.expect(IDENTIFIER).text
        self.expect(PUNCTUATION, '(')
        params = []
        if not self.check(PUNCTUATION, ')'):
            params.append(self.parse_param())
            while self.accept(PUNCTUATION, ','):
                params.append(self.parse_param())
        self.expect(PUNCTUATION, ')')
        self.expect(PUNCTUATION, '->')
        return_type = self.parse_type()
        docstring = None
        if self.check(KEYWORD, 'by'):
            by = self.advance().span
            self.expect(KEYWORD, 'llm')
            docstring = self.parse_docstring()
            end = self.expect(PUNCTUATION, ';').span
            body = ByLlm(by.to(end))
        elif self.check(PUNCTUATION, '{'):
            body = self.parse_opaque_block()
            end = body.span
        else:
            self.fail(["'by'", "'{'"])
        return FuncDecl(name, tuple(params), return_type, body, docstring, start.to(end))

    # param = IDENT ":" type_expr [ "=" literal ] ;
    def parse_param(self):
        token = self.expect(IDENTIFIER)
        self.expect(PUNCTUATION, ':')
        type_expr = self.parse_type()
        default = self.parse_literal() if self.accept(PUNCTUATION, '=') else None
        return Param(token.text, type_expr, default, token.span.to(self.previous_span()))

    def parse_opaque_block(self):
        start = self.expect(PUNCTUATION, '{').span
        depth = 1
        while depth:
            if self.check(END_OF_INPUT):
                self.fail(["'}'"])
            token = self.advance()
            if token.is_(PUNCTUATION, '{'):
                depth += 1
            elif token.is_(PUNCTUATION, '}'):
                depth -= 1
        return OpaqueBody(start.to(self.previous_span()))

    # sem_decl = "sem" IDENT { "." IDENT } "=" STRING ";" ;
    def parse_sem(self):
        start = self.expect(KEYWORD, 'sem').span
        path = [self.expect(IDENTIFIER).text]
        while self.accept(PUNCTUATION, '.'):
            path.append(self.expect(IDENTIFIER).text)
        self.expect(PUNCTUATION, '=')
        text = self.expect(STRING)
        if not text.value.strip():
            raise MtlSyntaxError('sem text must not be empty', text.span, ['non-empty string'])
        end = self.expect(PUNCTUATION, ';').span
        return SemDecl(tuple(path), text.value, start.to(end))

    # global_decl = "let" IDENT ":" type_expr ";" ;
    def parse_global(self):
        start = self.expect(KEYWORD, 'let').span
        name = self.expect(IDENTIFIER).text
        self.expect(PUNCTUATION, ':')
        type_expr = self.parse_type()
        end = self.expect(PUNCTUATION, ';').span
        return GlobalDecl(name, type_expr, start.to(end))

    # type_expr = IDENT [ "[" type_expr { "," type_expr } "]" ] ;
    def parse_type(self):
        token = self.expect(IDENTIFIER)
        if not self.accept(PUNCTUATION, '['):
            if token.text in GENERIC_ARITY:
                raise ArityError(
                    "'{}' expects {} type argument(s)".format(token.text, GENERIC_ARITY[token.text]),
                    token.span,
                    ["'['"],
                )
            return NamedType(token.text, token.span)
        args = [self.parse_type()]
        while self.accept(PUNCTUATION, ','):
            args.append(self.parse_type())
        end = self.expect(PUNCTUATION, ']').span
        span = token.span.to(end)
        if token.text not in GENERIC_ARITY:
            raise ArityError("'{}' is not a generic type".format(token.text), span)
        if len(args) != GENERIC_ARITY[token.text]:
            raise ArityError(
                "'{}' expects {} type argument(s), got {}".format(token.text, GENERIC_ARITY[token.text], len(args)),
                span,
            )
        return GenericType(token.text, tuple(args), span)

    # literal = STRING | INT | FLOAT | "true" | "false" | "None" | "[" "]" ;
    def parse_literal(self):
        token = self.current
        if self.accept(STRING):
            return Literal(LITERAL_STR, token.value, token.span)
        if self.accept(INT):
            return Literal(LITERAL_INT, token.value, token.span)
        if self.accept(FLOAT):
            return Literal(LITERAL_FLOAT, token.value, token.span)
        if self.accept(KEYWORD, 'true') or self.accept(KEYWORD, 'false'):
            return Literal(LITERAL_BOOL, token.text == 'true', token.span)
        if self.accept(KEYWORD, 'None'):
            return Literal(LITERAL_NONE, None, token.span)
        if self.accept(PUNCTUATION, '['):
            end = self.expect(PUNCTUATION, ']').span
            return Literal(LITERAL_LIST, (), token.span.to(end))
        self.fail(['string', 'integer', 'float', "'true'", "'false'", "'None'", "'['"])


def parse_program(tokens):
    """Build a SourceProgram from a token stream produced by ``tokenize``."""
    return Parser(tokens).parse_program()


def parse_source(source):
    return parse_program(tokenize(source))


def find_callsite(program, name):
    """Locate a by-llm function or method.

    ``name`` is either ``function``, ``Class.method`` or a bare method name
    that is unique across classes. Returns ``(owner, FuncDecl)`` where
    ``owner`` is the enclosing class name or None.
    """
    if '.' in name:
        owner, _, method = name.partition('.')
        candidates = [
            (cls.name, func)
            for cls in program.classes if cls.name == owner
            for func in cls.methods if func.name == method
        ]
    else:
        candidates = [(None, func) for func in program.functions if func.name == name]
        if not candidates:
            candidates = [(cls.name, func) for cls in program.classes for func in cls.methods if func.name == name]
    if not candidates:
        raise CallsiteError("no function named '{}'".format(name))
    if len(candidates) > 1:
        raise CallsiteError("'{}' is ambiguous: {}".format(
            name, ', '.join('{}.{}'.format(owner, func.name) for owner, func in candidates)))
    owner, func = candidates[0]
    if not func.is_by_llm:
        raise CallsiteError("'{}' is not a by llm function".format(name), func.span)
    return owner, func

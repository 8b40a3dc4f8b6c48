from .nodes import (
    ClassDecl,
    EnumDecl,
    FuncDecl,
    GlobalDecl,
    SemDecl,
    quote,
)

INDENT = '    '


def pretty_print(program):
    """Canonical MTL text for ``program``; reparses to an equal AST."""
    blocks = [_declaration(decl) for decl in program.declarations]
    return '\n\n'.join(blocks) + '\n' if blocks else ''


def _declaration(decl):
    if isinstance(decl, ClassDecl):
        return _class(decl)
    if isinstance(decl, EnumDecl):
        return _enum(decl)
    if isinstance(decl, FuncDecl):
        return _function(decl)
    if isinstance(decl, SemDecl):
        return 'sem {} = {};'.format(decl.target, quote(decl.text))
    if isinstance(decl, GlobalDecl):
        return 'let {}: {};'.format(decl.name, decl.type)
    raise TypeError('not a declaration: {!r}'.format(decl))


def _typed(node):
    text = '{}: {}'.format(node.name, node.type)
    if node.default is not None:
        text += ' = {}'.format(node.default)
    return text


def _function(func):
    signature = 'def {}({}) -> {}'.format(
        func.name,
        ', '.join(_typed(param) for param in func.params),
        func.return_type,
    )
    if not func.is_by_llm:
        return signature + ' { ... }'
    if func.docstring is not None:
        return '{} by llm {};'.format(signature, quote(func.docstring))
    return signature + ' by llm;'


def _class(cls):
    lines = ['class {} {{'.format(cls.name)]
    if cls.docstring is not None:
        lines.append(INDENT + quote(cls.docstring))
    lines.extend(INDENT + _typed(attr) + ';' for attr in cls.attrs)
    lines.extend(INDENT + _function(method) for method in cls.methods)
    lines.append('}')
    return '\n'.join(lines)


def _enum(enum):
    lines = ['enum {} {{'.format(enum.name)]
    if enum.docstring is not None:
        lines.append(INDENT + quote(enum.docstring))
    lines.append(',\n'.join(INDENT + name for name in enum.variant_names))
    lines.append('}')
    return '\n'.join(lines)

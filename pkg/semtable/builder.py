import logging
from dataclasses import replace

from frontend import PRIMITIVE_TYPES
from frontend.exceptions import DuplicateSemError, DuplicateSymbolError, ResolutionError, UndeclaredTypeError
from frontend.nodes import ClassDecl, EnumDecl, FuncDecl, GlobalDecl, SemDecl, named_types

from . import ATTRIBUTE, CLASS, ENUM, ENUM_VARIANT, FUNCTION, GLOBAL, METHOD, MODULE, PARAM
from .symbols import MODULE_ROOT, SemTable, SemTableEntry

logger = logging.getLogger(__name__)


class _SymbolTableBuilder:

    def __init__(self, program):
        self.program = program
        self.type_names = {decl.name for decl in program.declarations if isinstance(decl, (ClassDecl, EnumDecl))}
        self.entries = {MODULE_ROOT: SemTableEntry(MODULE_ROOT, MODULE)}

    def build(self):
        for decl in self.program.declarations:
            if isinstance(decl, ClassDecl):
                self.add_class(decl)
            elif isinstance(decl, EnumDecl):
                self.add_enum(decl)
            elif isinstance(decl, FuncDecl):
                self.add_function(decl, MODULE_ROOT, FUNCTION)
            elif isinstance(decl, GlobalDecl):
                self.check_type(decl.type)
                self.declare(MODULE_ROOT, decl.name, GLOBAL, decl.span, type=decl.type)
        return SemTable(self.entries.values())

    def declare(self, scope, name, kind, span, **fields):
        symbol_id = scope.child(name)
        if symbol_id in self.entries:
            previous = self.entries[symbol_id]
            raise DuplicateSymbolError(
                "duplicate name '{}' in {}".format(name, 'module scope' if scope == MODULE_ROOT else scope),
                span,
                notes=[("'{}' first declared here".format(name), previous.span)],
            )
        self.entries[symbol_id] = SemTableEntry(symbol_id, kind, scope=scope, span=span, **fields)
        return symbol_id

    def check_type(self, type_expr):
        for named in named_types(type_expr):
            if named.name not in PRIMITIVE_TYPES and named.name not in self.type_names:
                raise UndeclaredTypeError(named.name, named.span)

    def add_class(self, cls):
        class_id = self.declare(MODULE_ROOT, cls.name, CLASS, cls.span, docstring=cls.docstring)
        for attr in cls.attrs:
            self.check_type(attr.type)
            self.declare(class_id, attr.name, ATTRIBUTE, attr.span, type=attr.type, default=attr.default)
        for method in cls.methods:
            self.add_function(method, class_id, METHOD)

    def add_enum(self, enum):
        enum_id = self.declare(MODULE_ROOT, enum.name, ENUM, enum.span, docstring=enum.docstring)
        for variant in enum.variants:
            self.declare(enum_id, variant.name, ENUM_VARIANT, variant.span)

    def add_function(self, func, scope, kind):
        for param in func.params:
            self.check_type(param.type)
        self.check_type(func.return_type)
        func_id = self.declare(scope, func.name, kind, func.span, docstring=func.docstring)
        for param in func.params:
            self.declare(func_id, param.name, PARAM, param.span, type=param.type, default=param.default)


def build_symbol_table(program):
    """One entry per named entity of ``program``, all SemTexts absent.

    Raises DuplicateSymbolError for a name declared twice in one scope and
    UndeclaredTypeError for a signature naming an unknown type.
    """
    table = _SymbolTableBuilder(program).build()
    logger.debug('symbol table holds %d entries', len(table))
    return table


def _visible_names(scope, table):
    names = set()
    while scope is not None:
        names.update(table.members(scope))
        scope = table[scope].scope
    return sorted(names)


def lookup(target_path, scope, table, span=None):
    """Resolve a dotted path from ``scope``.

    The first segment is searched in ``scope`` and then each enclosing scope
    out to the module; later segments descend through members.
    """
    path = tuple(target_path)
    current = scope
    while True:
        members = table.members(current)
        if path[0] in members:
            entry = members[path[0]]
            break
        current = table[current].scope
        if current is None:
            raise ResolutionError(path, 1, _visible_names(scope, table), span)
    for index, segment in enumerate(path[1:], start=2):
        members = table.members(entry.id)
        if segment not in members:
            raise ResolutionError(path, index, sorted(members), span)
        entry = members[segment]
    return entry


def build_semtable(program, symtable):
    """Attach every ``sem T = Q`` of ``program`` to the entry T resolves to.

    ``symtable`` is left untouched; the result differs from it only in
    ``semtext`` fields. A second sem for an already annotated target raises
    DuplicateSemError carrying both spans.
    """
    entries = {entry.id: entry for entry in symtable}
    annotated_by = {}
    for decl in program.declarations:
        if not isinstance(decl, SemDecl):
            continue
        # sem declarations are module-level only
        entry = lookup(decl.target_path, MODULE_ROOT, symtable, decl.span)
        if entry.id in annotated_by:
            raise DuplicateSemError(decl.target, decl.span, annotated_by[entry.id].span)
        annotated_by[entry.id] = decl
        entries[entry.id] = replace(entries[entry.id], semtext=decl.text)
    logger.debug('attached %d semtexts', len(annotated_by))
    return SemTable(entries.values())

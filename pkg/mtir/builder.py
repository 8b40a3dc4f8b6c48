import logging
from collections import deque

from frontend.exceptions import ResolutionError, UndeclaredTypeError
from frontend.nodes import GenericType
from semtable import ATTRIBUTE, CLASS, ENUM_VARIANT, ENUM as ENUM_KIND
from semtable.builder import lookup
from semtable.symbols import MODULE_ROOT, SymbolId

from . import ENUM, GENERIC, OBJECT, SEMANTICS_BOTH, SEMANTICS_DOCSTRING, SEMANTICS_SEM
from .ir import Field, HierarchyEntry, HierarchyEntryStar, MtIr, MtIrStar, Sem

logger = logging.getLogger(__name__)


def expand_hierarchy(seeds, table):
    """Worklist expansion of every non-primitive type reachable from ``seeds``.

    FIFO order with a visited set: each type is expanded once, so cyclic
    class graphs terminate. Returns entries in first-visit order.
    """
    worklist = deque(seeds)
    visited = set()
    hierarchy = []
    while worklist:
        type_expr = worklist.popleft()
        if type_expr.is_primitive or type_expr in visited:
            continue
        visited.add(type_expr)
        if isinstance(type_expr, GenericType):
            entry = HierarchyEntry(type_expr, GENERIC, type_expr.args)
            worklist.extend(type_expr.args)
        else:
            decl = table.get(type_expr.name)
            if decl is None or decl.kind not in (CLASS, ENUM_KIND):
                raise UndeclaredTypeError(type_expr.name, type_expr.span)
            members = table.members(decl.id).values()
            if decl.kind == CLASS:
                fields = tuple(
                    Field(member.name, member.type, member.default) for member in members if member.kind == ATTRIBUTE
                )
                entry = HierarchyEntry(type_expr, OBJECT, fields)
                worklist.extend(field.type for field in fields)
            else:
                variants = tuple(member.name for member in members if member.kind == ENUM_VARIANT)
                entry = HierarchyEntry(type_expr, ENUM, variants)
        hierarchy.append(entry)
    logger.debug('expanded %d hierarchy entries', len(hierarchy))
    return tuple(hierarchy)


def build_base_mtir(callsite, table, owner=None):
    """Structural MT-IR for a by-llm function, or a method of class ``owner``.

    Inputs are seeded into the worklist in parameter order, then the output.
    """
    path = callsite.name if owner is None else '{}.{}'.format(owner, callsite.name)
    inputs = tuple(Field(param.name, param.type, param.default) for param in callsite.params)
    seeds = [field.type for field in inputs] + [callsite.return_type]
    return MtIr(
        name=callsite.name,
        path=path,
        inputs=inputs,
        output=callsite.return_type,
        hierarchy=expand_hierarchy(seeds, table),
    )


class _SemTextSource:

    def __init__(self, table, scope, semantics):
        if semantics not in (SEMANTICS_SEM, SEMANTICS_DOCSTRING, SEMANTICS_BOTH):
            raise ValueError('unknown semantics mode {!r}'.format(semantics))
        self.table = table
        self.scope = scope
        self.semantics = semantics

    def __call__(self, *path):
        try:
            entry = lookup(path, self.scope, self.table)
        except ResolutionError:
            return None
        if self.semantics == SEMANTICS_SEM:
            return entry.semtext
        if self.semantics == SEMANTICS_DOCSTRING:
            return entry.docstring
        return entry.semtext if entry.semtext is not None else entry.docstring

    def of_type(self, type_expr):
        if isinstance(type_expr, GenericType):
            return None
        return self(type_expr.name)


def enrich_mtir(base, table, semantics=SEMANTICS_SEM):
    """Pair every entity slot of ``base`` with its SemText.

    ``semantics`` selects the source: sem declarations, docstrings, or both
    with sem declarations taking precedence per entity. A parameter slot
    carries the parameter's own SemText; a type's SemText sits on its
    hierarchy key.
    """
    owner = SymbolId(base.path).segments[:-1]
    scope = SymbolId('.'.join(owner)) if owner else MODULE_ROOT
    semtext = _SemTextSource(table, scope, semantics)
    hierarchy = []
    for entry in base.hierarchy:
        type_name = str(entry.type)
        if entry.kind == OBJECT:
            members = tuple(Sem(field, semtext(type_name, field.name)) for field in entry.members)
        elif entry.kind == ENUM:
            members = tuple(Sem(variant, semtext(type_name, variant)) for variant in entry.members)
        else:
            members = tuple(Sem(arg) for arg in entry.members)
        hierarchy.append(HierarchyEntryStar(Sem(entry.type, semtext.of_type(entry.type)), entry.kind, members))
    return MtIrStar(
        name=Sem(base.name, semtext(base.name)),
        path=base.path,
        inputs=tuple(Sem(field, semtext(base.name, field.name)) for field in base.inputs),
        output=Sem(base.output, semtext.of_type(base.output)),
        hierarchy=tuple(hierarchy),
    )

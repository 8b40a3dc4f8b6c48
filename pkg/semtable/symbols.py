from dataclasses import dataclass, field, replace
from typing import Optional

from frontend.nodes import Literal, Span, TypeExpr

from . import MODULE


@dataclass(frozen=True, order=True)
class SymbolId:
    """Canonical dotted path of a named entity; the module root is ''."""
    path: str

    @property
    def name(self):
        return self.path.rpartition('.')[2]

    @property
    def segments(self):
        return tuple(self.path.split('.')) if self.path else ()

    def child(self, name):
        return SymbolId('{}.{}'.format(self.path, name) if self.path else name)

    def __str__(self):
        return self.path or '<module>'


MODULE_ROOT = SymbolId('')


@dataclass(frozen=True)
class SemTableEntry:
    id: SymbolId
    kind: str
    type: Optional[TypeExpr] = None
    scope: Optional[SymbolId] = None
    semtext: Optional[str] = None
    docstring: Optional[str] = None
    default: Optional[Literal] = None
    span: Optional[Span] = field(default=None, compare=False, repr=False)

    @property
    def name(self):
        return self.id.name


class SemTable:
    """Symbol table whose entries may carry SemTexts.

    Entries keep declaration order. The table is never mutated once built;
    ``with_semtext`` returns a new table.
    """

    def __init__(self, entries):
        self._entries = {entry.id: entry for entry in entries}
        self._members = {}
        for entry in self._entries.values():
            if entry.scope is not None:
                self._members.setdefault(entry.scope, {})[entry.name] = entry.id

    @classmethod
    def empty(cls):
        return cls([SemTableEntry(MODULE_ROOT, MODULE)])

    def __getitem__(self, symbol_id):
        return self._entries[symbol_id]

    def __contains__(self, symbol_id):
        return symbol_id in self._entries

    def __iter__(self):
        return iter(self._entries.values())

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, SemTable):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self):
        return '<SemTable {} entries>'.format(len(self))

    def get(self, path):
        return self._entries.get(SymbolId(path))

    def members(self, scope):
        """Entries declared directly inside ``scope``, keyed by name."""
        return {name: self._entries[symbol_id] for name, symbol_id in self._members.get(scope, {}).items()}

    def annotated(self):
        return [entry for entry in self if entry.semtext is not None]

    def with_semtext(self, symbol_id, semtext):
        entries = dict(self._entries)
        entries[symbol_id] = replace(entries[symbol_id], semtext=semtext)
        return SemTable(entries.values())

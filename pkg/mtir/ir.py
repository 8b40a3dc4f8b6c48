"""Meaning-Typed IR of a by-llm call-site and its SemText-enriched form.

``MtIr`` is the tuple (name, inputs, output, hierarchy). ``MtIrStar`` has the
same shape with every entity slot wrapped in ``Sem``, which pairs the slot
with its SemText (None when the entity has none).
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from frontend.nodes import Literal, TypeExpr

from . import ENUM, GENERIC, OBJECT


@dataclass(frozen=True)
class Field:
    """A typed name: a call-site parameter or a class attribute."""
    name: str
    type: TypeExpr
    default: Optional[Literal] = None


@dataclass(frozen=True)
class HierarchyEntry:
    type: TypeExpr
    kind: str
    # Field for OBJECT, variant name for ENUM, TypeExpr for GENERIC
    members: tuple


@dataclass(frozen=True)
class MtIr:
    name: str
    path: str
    inputs: Tuple[Field, ...]
    output: TypeExpr
    hierarchy: Tuple[HierarchyEntry, ...]

    @property
    def hierarchy_map(self):
        return {entry.type: entry for entry in self.hierarchy}


@dataclass(frozen=True)
class Sem:
    value: object
    semtext: Optional[str] = None


@dataclass(frozen=True)
class HierarchyEntryStar:
    type: Sem
    kind: str
    members: Tuple[Sem, ...]

    @property
    def is_object(self):
        return self.kind == OBJECT

    @property
    def is_enum(self):
        return self.kind == ENUM

    @property
    def is_generic(self):
        return self.kind == GENERIC


@dataclass(frozen=True)
class MtIrStar:
    name: Sem
    path: str
    inputs: Tuple[Sem, ...]
    output: Sem
    hierarchy: Tuple[HierarchyEntryStar, ...]

    @property
    def hierarchy_map(self):
        return {entry.type.value: entry for entry in self.hierarchy}

    def slots(self):
        """Every ``(label, Sem)`` entity slot, in prompt order."""
        yield self.path, self.name
        for slot in self.inputs:
            yield '{}.{}'.format(self.path, slot.value.name), slot
        yield '->', self.output
        for entry in self.hierarchy:
            type_name = str(entry.type.value)
            yield type_name, entry.type
            if entry.is_generic:
                continue
            for member in entry.members:
                name = member.value.name if entry.is_object else member.value
                yield '{}.{}'.format(type_name, name), member


def project_base(star):
    """Drop every SemText from ``star``, keeping order."""
    return MtIr(
        name=star.name.value,
        path=star.path,
        inputs=tuple(slot.value for slot in star.inputs),
        output=star.output.value,
        hierarchy=tuple(
            HierarchyEntry(entry.type.value, entry.kind, tuple(member.value for member in entry.members))
            for entry in star.hierarchy
        ),
    )

from rest_framework import serializers

from frontend.nodes import GenericType
from mtir import ENUM, OBJECT
from mtir.ir import MtIrStar, project_base

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
    literal_value,
)

PRIMITIVE_VALUES = {
    'str': Str,
    'int': Int,
    'float': Float,
    'bool': Bool,
}


def _mismatch(path, message):
    return serializers.ValidationError({path: [message]})


def describe(value):
    if isinstance(value, ObjectValue):
        return value.cls
    if isinstance(value, EnumValue):
        return '{}.{}'.format(value.enum, value.variant)
    return {
        Str: 'str',
        Int: 'int',
        Float: 'float',
        Bool: 'bool',
        ListValue: 'list',
        DictValue: 'dict',
    }.get(type(value), 'None')


class TypeUniverse:
    """Classes and enums reachable from one call-site, taken from its MT-IR."""

    def __init__(self, hierarchy):
        self.classes = {}
        self.enums = {}
        for entry in hierarchy:
            if entry.kind == OBJECT:
                self.classes[entry.type.name] = entry.members
            elif entry.kind == ENUM:
                self.enums[entry.type.name] = entry.members

    @classmethod
    def from_mtir(cls, ir):
        if isinstance(ir, MtIrStar):
            ir = project_base(ir)
        return cls(ir.hierarchy)

    def check(self, value, type_expr, path):
        """Return ``value`` conformed to ``type_expr``.

        The only conversion is int to float widening; objects come back with
        defaults filled and fields in declaration order. Raises a
        ValidationError keyed by the path of the first mismatch.
        """
        if isinstance(type_expr, GenericType):
            return self.check_generic(value, type_expr, path)
        name = type_expr.name
        if name in PRIMITIVE_VALUES:
            if name == 'float' and isinstance(value, Int):
                return Float(float(value.value))
            if not isinstance(value, PRIMITIVE_VALUES[name]):
                raise _mismatch(path, 'expected {}, got {}'.format(name, describe(value)))
            return value
        if name in self.enums:
            if not isinstance(value, EnumValue) or value.enum != name:
                raise _mismatch(path, 'expected {}, got {}'.format(name, describe(value)))
            if value.variant not in self.enums[name]:
                raise _mismatch(path, "'{}' is not a variant of {}".format(value.variant, name))
            return value
        if name in self.classes:
            return self.check_object(value, name, path)
        raise _mismatch(path, 'unknown type {}'.format(name))

    def check_generic(self, value, type_expr, path):
        if type_expr.name == 'Optional':
            if value == NONE:
                return value
            return self.check(value, type_expr.args[0], path)
        if type_expr.name == 'list':
            if not isinstance(value, ListValue):
                raise _mismatch(path, 'expected {}, got {}'.format(type_expr, describe(value)))
            return ListValue(tuple(
                self.check(item, type_expr.args[0], '{}[{}]'.format(path, index))
                for index, item in enumerate(value.items)
            ))
        key_type, value_type = type_expr.args
        if not isinstance(value, DictValue):
            raise _mismatch(path, 'expected {}, got {}'.format(type_expr, describe(value)))
        if str(key_type) != 'str':
            raise _mismatch(path, 'dict keys must be str, declared {}'.format(key_type))
        return DictValue(tuple(
            (key, self.check(item, value_type, '{}[{!r}]'.format(path, key)))
            for key, item in value.items
        ))

    def check_object(self, value, name, path):
        if not isinstance(value, ObjectValue) or value.cls != name:
            raise _mismatch(path, 'expected {}, got {}'.format(name, describe(value)))
        given = dict(value.fields)
        if len(given) != len(value.fields):
            raise _mismatch(path, 'repeated field in {}'.format(name))
        declared = self.classes[name]
        unknown = set(given) - {field.name for field in declared}
        if unknown:
            raise _mismatch('{}.{}'.format(path, sorted(unknown)[0]), 'unknown field of {}'.format(name))
        fields = []
        for field in declared:
            field_path = '{}.{}'.format(path, field.name)
            if field.name in given:
                item = given[field.name]
            elif field.default is not None:
                item = literal_value(field.default)
            else:
                raise _mismatch(field_path, 'missing required field')
            fields.append((field.name, self.check(item, field.type, field_path)))
        return ObjectValue(name, tuple(fields))

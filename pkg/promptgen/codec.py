"""JSON encoding of runtime values for argument files and ``--format json``.

Objects are tagged ``{"$type": "RepoState", ...fields}``, enum variants
``{"$enum": "AgentTypes", "variant": "END"}``; JSON null is None.
"""
import math

from rest_framework import serializers

from . import JSON_ENUM_TAG, JSON_TYPE_TAG, JSON_VARIANT_KEY
from .values import (
    NONE,
    Bool,
    DictValue,
    EnumValue,
    Float,
    Int,
    ListValue,
    NoneValue,
    ObjectValue,
    Str,
)


def value_from_json(data, path='$'):
    if data is None:
        return NONE
    if isinstance(data, bool):
        return Bool(data)
    if isinstance(data, int):
        return Int(data)
    if isinstance(data, float):
        if not math.isfinite(data):
            raise serializers.ValidationError({path: ['non-finite numbers are not supported']})
        return Float(data)
    if isinstance(data, str):
        return Str(data)
    if isinstance(data, list):
        return ListValue(tuple(value_from_json(item, '{}[{}]'.format(path, index)) for index, item in enumerate(data)))
    if isinstance(data, dict):
        if JSON_TYPE_TAG in data:
            return ObjectValue(data[JSON_TYPE_TAG], tuple(
                (key, value_from_json(item, '{}.{}'.format(path, key)))
                for key, item in data.items() if key != JSON_TYPE_TAG
            ))
        if JSON_ENUM_TAG in data:
            if set(data) != {JSON_ENUM_TAG, JSON_VARIANT_KEY}:
                raise serializers.ValidationError({path: ['enum values need exactly "$enum" and "variant"']})
            return EnumValue(data[JSON_ENUM_TAG], data[JSON_VARIANT_KEY])
        return DictValue(tuple((key, value_from_json(item, '{}.{}'.format(path, key))) for key, item in data.items()))
    raise serializers.ValidationError({path: ['unsupported JSON value']})


def value_to_json(value):
    if isinstance(value, NoneValue):
        return None
    if isinstance(value, (Str, Int, Float, Bool)):
        return value.value
    if isinstance(value, ListValue):
        return [value_to_json(item) for item in value.items]
    if isinstance(value, DictValue):
        return {key: value_to_json(item) for key, item in value.items}
    if isinstance(value, EnumValue):
        return {JSON_ENUM_TAG: value.enum, JSON_VARIANT_KEY: value.variant}
    if isinstance(value, ObjectValue):
        data = {JSON_TYPE_TAG: value.cls}
        data.update((name, value_to_json(item)) for name, item in value.fields)
        return data
    raise TypeError('not a runtime value: {!r}'.format(value))


def arguments_from_json(data):
    """Decode an argument file: a JSON object of parameter name to value."""
    if not isinstance(data, dict):
        raise serializers.ValidationError('argument file must hold a JSON object')
    return {name: value_from_json(item, name) for name, item in data.items()}

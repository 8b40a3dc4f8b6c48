from rest_framework import serializers

from . import SYMBOL_KINDS
from .symbols import MODULE_ROOT


class CompactSerializer(serializers.Serializer):
    """Serializer that leaves out fields whose value is None."""

    def to_representation(self, instance):
        data = super().to_representation(instance)
        return {key: value for key, value in data.items() if value is not None}


class SymbolSerializer(CompactSerializer):
    """Row of the ``dump-symbols`` listing."""
    path = serializers.CharField(source='id.path')
    kind = serializers.ChoiceField(choices=SYMBOL_KINDS)
    type = serializers.SerializerMethodField()
    semtext = serializers.CharField(allow_null=True)
    docstring = serializers.CharField(allow_null=True)

    def get_type(self, entry):
        return None if entry.type is None else str(entry.type)


def dump_symbols(table):
    entries = sorted((entry for entry in table if entry.id != MODULE_ROOT), key=lambda entry: entry.id.path)
    return SymbolSerializer(entries, many=True).data

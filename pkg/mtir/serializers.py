import json

from rest_framework import serializers

from semtable.serializers import CompactSerializer

from . import ENUM, GENERIC, OBJECT


def _str_or_none(value):
    return None if value is None else str(value)


class FieldSlotSerializer(CompactSerializer):
    """An input or attribute slot: ``Sem(Field)``."""
    name = serializers.CharField(source='value.name')
    type = serializers.SerializerMethodField()
    default = serializers.SerializerMethodField()
    semtext = serializers.CharField(allow_null=True)

    def get_type(self, slot):
        return str(slot.value.type)

    def get_default(self, slot):
        return _str_or_none(slot.value.default)


class VariantSlotSerializer(CompactSerializer):
    name = serializers.CharField(source='value')
    semtext = serializers.CharField(allow_null=True)


class TypeSlotSerializer(CompactSerializer):
    type = serializers.SerializerMethodField()
    semtext = serializers.CharField(allow_null=True)

    def get_type(self, slot):
        return str(slot.value)


class HierarchyEntrySerializer(CompactSerializer):
    type = serializers.SerializerMethodField()
    kind = serializers.ChoiceField(choices=[OBJECT, ENUM, GENERIC])
    semtext = serializers.CharField(source='type.semtext', allow_null=True)
    members = serializers.SerializerMethodField()

    member_serializers = {
        OBJECT: FieldSlotSerializer,
        ENUM: VariantSlotSerializer,
        GENERIC: TypeSlotSerializer,
    }

    def get_type(self, entry):
        return str(entry.type.value)

    def get_members(self, entry):
        return self.member_serializers[entry.kind](entry.members, many=True).data


class MtIrStarSerializer(CompactSerializer):
    name = serializers.CharField(source='name.value')
    path = serializers.SerializerMethodField()
    semtext = serializers.CharField(source='name.semtext', allow_null=True)
    inputs = FieldSlotSerializer(many=True)
    output = TypeSlotSerializer()
    hierarchy = HierarchyEntrySerializer(many=True)

    def get_path(self, star):
        # Only methods have a path distinct from their name
        return None if star.path == star.name.value else star.path


def serialize_mtir(star):
    """Canonical, byte-deterministic JSON document for an MT-IR*."""
    return json.dumps(MtIrStarSerializer(star).data, ensure_ascii=False, separators=(',', ':'))

from dataclasses import dataclass
from typing import Optional

from django.conf import settings
from rest_framework import serializers

from backend.factory import MOCK_PREFIX
from mtir import SEMANTICS_MODES

from . import CALLSITE_SUBCOMMANDS, FORMAT_TEXT, FORMATS, SUBCOMMANDS


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    source: str
    fn: Optional[str] = None
    args: Optional[str] = None
    semantics: str = 'sem'
    backend: str = 'http'
    retries: int = 2
    show_defaults: bool = False
    format: str = FORMAT_TEXT


class CliConfigSerializer(serializers.Serializer):
    subcommand = serializers.ChoiceField(choices=SUBCOMMANDS)
    source = serializers.CharField()
    fn = serializers.CharField(required=False, allow_null=True)
    args = serializers.CharField(required=False, allow_null=True)
    semantics = serializers.ChoiceField(choices=SEMANTICS_MODES, required=False, allow_null=True)
    backend = serializers.CharField(required=False, allow_null=True)
    retries = serializers.IntegerField(min_value=0, required=False, allow_null=True)
    show_defaults = serializers.BooleanField(required=False, allow_null=True)
    format = serializers.ChoiceField(choices=FORMATS, default=FORMAT_TEXT)

    def validate(self, data):
        if data['subcommand'] in CALLSITE_SUBCOMMANDS and not data.get('fn'):
            raise serializers.ValidationError({'fn': ['{} requires --fn'.format(data['subcommand'])]})
        backend = data.get('backend') or settings.MTSEM_BACKEND
        if backend in (MOCK_PREFIX, MOCK_PREFIX.rstrip(':')):
            raise serializers.ValidationError({'backend': ['the mock backend requires a script path']})
        return data

    def create(self, validated_data):
        """Fill unset options from settings."""
        def pick(name, default):
            value = validated_data.get(name)
            return default if value is None else value

        return CliConfig(
            subcommand=validated_data['subcommand'],
            source=validated_data['source'],
            fn=validated_data.get('fn'),
            args=validated_data.get('args'),
            semantics=pick('semantics', settings.MTSEM_SEMANTICS),
            backend=pick('backend', settings.MTSEM_BACKEND),
            retries=pick('retries', settings.MTSEM_RETRIES),
            show_defaults=pick('show_defaults', settings.MTSEM_SHOW_DEFAULTS),
            format=validated_data['format'],
        )

from rest_framework import serializers

from . import MATCH_KINDS


class CompletionRequestSerializer(serializers.Serializer):
    prompt = serializers.CharField(trim_whitespace=False)
    model = serializers.CharField()
    temperature = serializers.FloatField(min_value=0.0, max_value=2.0)
    max_tokens = serializers.IntegerField(min_value=1)
    timeout = serializers.FloatField()

    def validate_timeout(self, value):
        if value <= 0:
            raise serializers.ValidationError('Timeout must be positive.')
        return value


class ScriptEntrySerializer(serializers.Serializer):
    """One entry of a mock script file."""
    match = serializers.ChoiceField(choices=MATCH_KINDS)
    pattern = serializers.CharField(trim_whitespace=False)
    reply = serializers.CharField(trim_whitespace=False, allow_blank=True)


class MessageSerializer(serializers.Serializer):
    role = serializers.CharField(required=False)
    content = serializers.CharField(trim_whitespace=False, allow_blank=True)


class ChoiceSerializer(serializers.Serializer):
    message = MessageSerializer()


class UsageSerializer(serializers.Serializer):
    prompt_tokens = serializers.IntegerField(required=False)
    completion_tokens = serializers.IntegerField(required=False)


class ChatCompletionEnvelopeSerializer(serializers.Serializer):
    """The parts of an OpenAI-compatible chat-completion response we read."""
    choices = ChoiceSerializer(many=True, allow_empty=False)
    usage = UsageSerializer(required=False, allow_null=True)

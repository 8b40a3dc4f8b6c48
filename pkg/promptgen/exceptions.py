from rest_framework import serializers
from rest_framework.exceptions import ParseError


class ResponseParseError(ParseError):
    """Model output that is not a well-formed value literal."""
    default_code = 'response_parse_error'

    def __init__(self, detail, position=None):
        super().__init__(detail)
        self.position = position


class ResponseTypeError(serializers.ValidationError):
    """A well-formed value literal of the wrong shape; ``path`` names the spot."""
    default_code = 'response_type_error'

    def __init__(self, path, message):
        super().__init__({path: [message]})
        self.path = path
        self.message = message

    def __str__(self):
        return '{}: {}'.format(self.path, self.message)


def first_error(validation_error):
    """``(path, message)`` of the first entry of a ValidationError detail."""
    detail = validation_error.detail
    if isinstance(detail, dict):
        path, messages = next(iter(detail.items()))
        return path, str(messages[0] if isinstance(messages, list) else messages)
    return '', str(detail[0] if isinstance(detail, list) else detail)

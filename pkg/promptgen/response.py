import logging
import re

from rest_framework import serializers

from .exceptions import ResponseParseError, ResponseTypeError, first_error
from .literal import parse_literal
from .typecheck import TypeUniverse

logger = logging.getLogger(__name__)

FENCE_OPEN = re.compile(r'\A```[^\n]*\n')
FENCE_CLOSE = re.compile(r'\n?```\Z')
ECHO_LINES = ('[Output]', '<result>')


def strip_framing(text):
    """Remove code fences and a leading ``[Output]``/``<result>`` echo."""
    text = text.strip()
    if text.startswith('```'):
        text = FENCE_CLOSE.sub('', FENCE_OPEN.sub('', text, count=1), count=1).strip('`').strip()
    lines = text.split('\n')
    while lines and lines[0].strip() in ECHO_LINES:
        lines.pop(0)
    if lines and lines[-1].strip() == '</result>':
        lines.pop()
    return '\n'.join(lines).strip()


def parse_response(text, expected, ir):
    """Parse raw model output into a RuntimeValue of type ``expected``.

    Raises ResponseParseError for a malformed literal and ResponseTypeError
    for a well-formed literal of the wrong shape.
    """
    body = strip_framing(text)
    if not body:
        raise ResponseParseError('empty response', 0)
    value = parse_literal(body)
    try:
        return TypeUniverse.from_mtir(ir).check(value, expected, str(expected))
    except serializers.ValidationError as exc:
        path, message = first_error(exc)
        logger.debug('response rejected at %s: %s', path, message)
        raise ResponseTypeError(path, message) from exc

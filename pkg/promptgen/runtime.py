import logging
from dataclasses import dataclass
from typing import Tuple

from django.conf import settings

from backend.base import CompletionRequest

from .exceptions import ResponseParseError, ResponseTypeError
from .prompt import assemble_prompt
from .response import parse_response

logger = logging.getLogger(__name__)

RETRY_SUFFIX = 'The previous response was rejected ({kind}: {error}). Return only a value of type {type}.'


@dataclass(frozen=True)
class Invocation:
    value: object
    # The prompt without retry suffixes, as dump-prompt prints it
    prompt: str
    attempts: int
    responses: Tuple[str, ...]


def retry_prompt(prompt, error, expected):
    if isinstance(error, ResponseParseError):
        kind, text = 'parse error', str(error.detail)
    else:
        kind, text = 'type error', str(error)
    return prompt + RETRY_SUFFIX.format(kind=kind, error=text, type=expected) + '\n'


def invoke(ir, bound, backend, retries=None, show_defaults=None):
    """Run one by-llm call: assemble, complete, parse; re-ask on bad output.

    Backend failures propagate at once. After ``retries`` rejected
    responses the last ResponseParseError/ResponseTypeError is raised.
    """
    retries = settings.MTSEM_RETRIES if retries is None else retries
    if retries < 0:
        raise ValueError('retries must not be negative, got {}'.format(retries))
    show_defaults = settings.MTSEM_SHOW_DEFAULTS if show_defaults is None else show_defaults
    prompt = assemble_prompt(ir, bound, show_defaults=show_defaults).render()
    expected = ir.output.value
    current = prompt
    responses = []
    for attempt in range(1, retries + 2):
        result = backend.complete(CompletionRequest.from_settings(current))
        responses.append(result.text)
        try:
            value = parse_response(result.text, expected, ir)
        except (ResponseParseError, ResponseTypeError) as exc:
            logger.warning('%s: response %d rejected: %s', ir.path, attempt, exc)
            error = exc
            current = retry_prompt(prompt, exc, expected)
            continue
        return Invocation(value, prompt, attempt, tuple(responses))
    raise error

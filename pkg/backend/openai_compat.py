"""OpenAI-compatible chat-completions client."""
import logging
import time

import requests
from django.conf import settings

from . import RETRY_STATUS
from .base import CompletionBackend, CompletionResult
from .exceptions import BackendError, BackendHTTPError, BackendTimeout, MalformedEnvelope
from .serializers import ChatCompletionEnvelopeSerializer

logger = logging.getLogger(__name__)


class HttpBackend(CompletionBackend):
    """POSTs the prompt as a single user message to ``<api_base>/chat/completions``.

    429 and 5xx answers are retried with exponential backoff, up to
    ``attempts`` requests in total. Anything else fails at once.
    """

    def __init__(self, api_base=None, api_key=None, attempts=None, backoff=None, sleep=time.sleep):
        self.api_base = (api_base or settings.MTSEM_API_BASE).rstrip('/')
        self.api_key = settings.MTSEM_API_KEY if api_key is None else api_key
        self.attempts = settings.MTSEM_HTTP_ATTEMPTS if attempts is None else attempts
        if self.attempts < 1:
            raise ValueError('HTTP attempts must be at least 1, got {}'.format(self.attempts))
        self.backoff = settings.MTSEM_BACKOFF_SECONDS if backoff is None else backoff
        self.sleep = sleep

    @property
    def url(self):
        return '{}/chat/completions'.format(self.api_base)

    def headers(self):
        headers = {'Content-Type': 'application/json'}
        if self.api_key:
            headers['Authorization'] = 'Bearer {}'.format(self.api_key)
        return headers

    def payload(self, request):
        return {
            'model': request.model,
            'messages': [{'role': 'user', 'content': request.prompt}],
            'temperature': request.temperature,
            'max_tokens': request.max_tokens,
        }

    def complete(self, request):
        for attempt in range(1, self.attempts + 1):
            start = time.monotonic()
            try:
                response = requests.post(
                    self.url,
                    json=self.payload(request),
                    headers=self.headers(),
                    timeout=request.timeout,
                )
            except requests.Timeout as exc:
                raise BackendTimeout('no response within {}s'.format(request.timeout)) from exc
            except requests.RequestException as exc:
                raise BackendError('transport failure: {}'.format(exc)) from exc
            latency = time.monotonic() - start
            if response.status_code in RETRY_STATUS and attempt < self.attempts:
                wait = self.backoff * 2 ** (attempt - 1)
                logger.warning('HTTP %d from %s, retrying in %.1fs', response.status_code, self.url, wait)
                self.sleep(wait)
                continue
            if not 200 <= response.status_code < 300:
                raise BackendHTTPError(response.status_code, response.text)
            logger.info('completion received in %.3fs after %d attempt(s)', latency, attempt)
            return self.parse_envelope(response, latency, attempt)

    def parse_envelope(self, response, latency, attempt):
        try:
            data = response.json()
        except ValueError as exc:
            raise MalformedEnvelope('response body is not JSON') from exc
        serializer = ChatCompletionEnvelopeSerializer(data=data)
        if not serializer.is_valid():
            raise MalformedEnvelope('unexpected envelope: {}'.format(serializer.errors))
        envelope = serializer.validated_data
        usage = envelope.get('usage')
        return CompletionResult(
            text=envelope['choices'][0]['message']['content'],
            usage=dict(usage) if usage else None,
            latency=latency,
            attempts=attempt,
        )

from rest_framework.exceptions import APIException

from . import BODY_EXCERPT_LENGTH


class BackendError(APIException):
    status_code = 502
    default_detail = 'Completion backend failed.'
    default_code = 'backend_error'


class BackendTimeout(BackendError):
    status_code = 504
    default_detail = 'Completion backend timed out.'
    default_code = 'backend_timeout'


class BackendHTTPError(BackendError):
    default_code = 'backend_http_error'

    def __init__(self, status, body):
        super().__init__('HTTP {}: {}'.format(status, body[:BODY_EXCERPT_LENGTH]))
        self.status = status


class MalformedEnvelope(BackendError):
    default_detail = 'Malformed chat-completion envelope.'
    default_code = 'malformed_envelope'


class UnscriptedPrompt(BackendError):
    default_code = 'unscripted_prompt'

    def __init__(self, digest):
        super().__init__('unscripted prompt (sha256 {})'.format(digest))
        self.digest = digest

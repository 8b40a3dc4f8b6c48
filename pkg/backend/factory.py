from .mock import EchoBackend, ScriptedBackend
from .openai_compat import HttpBackend

MOCK_PREFIX = 'mock:'
ECHO_PREFIX = 'echo:'
HTTP = 'http'


def get_backend(spec):
    """Backend for a ``--backend`` value: ``mock:<script>``, ``echo:<reply>`` or ``http``."""
    if spec == HTTP:
        return HttpBackend()
    if spec.startswith(MOCK_PREFIX) and spec[len(MOCK_PREFIX):]:
        return ScriptedBackend.from_file(spec[len(MOCK_PREFIX):])
    if spec.startswith(ECHO_PREFIX):
        return EchoBackend(spec[len(ECHO_PREFIX):])
    raise ValueError('unknown backend {!r}; use mock:<script>, echo:<reply> or http'.format(spec))

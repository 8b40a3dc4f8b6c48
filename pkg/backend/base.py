import abc
import hashlib
from dataclasses import asdict, dataclass
from typing import Optional

from django.conf import settings

from .serializers import CompletionRequestSerializer


def prompt_hash(prompt):
    return hashlib.sha256(prompt.encode('utf-8')).hexdigest()


@dataclass(frozen=True)
class CompletionRequest:
    prompt: str
    model: str
    temperature: float = 0.0
    max_tokens: int = 1024
    # Seconds
    timeout: float = 60.0

    def __post_init__(self):
        CompletionRequestSerializer(data=asdict(self)).is_valid(raise_exception=True)

    @classmethod
    def from_settings(cls, prompt):
        return cls(
            prompt=prompt,
            model=settings.MTSEM_MODEL,
            temperature=settings.MTSEM_TEMPERATURE,
            max_tokens=settings.MTSEM_MAX_TOKENS,
            timeout=settings.MTSEM_TIMEOUT,
        )


@dataclass(frozen=True)
class CompletionResult:
    text: str
    # {'prompt_tokens': ..., 'completion_tokens': ...} when the service reports it
    usage: Optional[dict] = None
    # Seconds
    latency: float = 0.0
    attempts: int = 1


class CompletionBackend(abc.ABC):
    """A completion service. Implementations must allow concurrent calls."""

    @abc.abstractmethod
    def complete(self, request):
        """Return a CompletionResult for ``request`` or raise a BackendError."""

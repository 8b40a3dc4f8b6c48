import json
import logging
import threading
import time
from dataclasses import dataclass

from . import MATCH_CONTAINS, MATCH_EXACT
from .base import CompletionBackend, CompletionResult, prompt_hash
from .exceptions import UnscriptedPrompt
from .serializers import ScriptEntrySerializer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScriptEntry:
    match: str
    pattern: str
    reply: str

    def matches(self, prompt):
        if self.match == MATCH_EXACT:
            return prompt == self.pattern
        if self.match == MATCH_CONTAINS:
            return self.pattern in prompt
        return prompt_hash(prompt) == self.pattern


class RecordingBackend(CompletionBackend):
    """Keeps every prompt it receives, in arrival order."""

    def __init__(self):
        self._lock = threading.Lock()
        self._received = []

    @property
    def received(self):
        with self._lock:
            return tuple(self._received)

    def record(self, request):
        with self._lock:
            self._received.append(request.prompt)

    def complete(self, request):
        start = time.monotonic()
        self.record(request)
        text = self.reply(request.prompt)
        return CompletionResult(text, latency=time.monotonic() - start)

    def reply(self, prompt):
        raise NotImplementedError


class EchoBackend(RecordingBackend):
    """Answers every prompt with the same reply."""

    def __init__(self, reply):
        super().__init__()
        self._reply = reply

    def reply(self, prompt):
        return self._reply


class ScriptedBackend(RecordingBackend):
    """Answers from a fixed script; the first matching entry wins."""

    def __init__(self, entries):
        super().__init__()
        self.entries = tuple(entries)

    @classmethod
    def from_data(cls, data):
        serializer = ScriptEntrySerializer(data=data, many=True)
        serializer.is_valid(raise_exception=True)
        return cls(ScriptEntry(**entry) for entry in serializer.validated_data)

    @classmethod
    def from_file(cls, path):
        with open(path, encoding='utf-8') as script:
            return cls.from_data(json.load(script))

    def reply(self, prompt):
        for entry in self.entries:
            if entry.matches(prompt):
                return entry.reply
        digest = prompt_hash(prompt)
        logger.warning('no script entry for prompt %s', digest)
        raise UnscriptedPrompt(digest)

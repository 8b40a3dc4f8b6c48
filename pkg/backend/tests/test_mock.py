import json
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor

from django.test import SimpleTestCase, override_settings
from parameterized import parameterized
from rest_framework import serializers

from backend.base import CompletionRequest, prompt_hash
from backend.exceptions import UnscriptedPrompt
from backend.factory import get_backend
from backend.mock import EchoBackend, ScriptedBackend, ScriptEntry
from backend.openai_compat import HttpBackend
from frontend.tests.corpus import corpus_path


def request(prompt):
    return CompletionRequest(prompt, model='test-model')


class TestScriptedBackend(SimpleTestCase):

    def setUp(self):
        self.backend = ScriptedBackend([
            ScriptEntry('exact', 'ping\n', 'pong'),
            ScriptEntry('sha256', prompt_hash('hashed'), 'by hash'),
            ScriptEntry('contains', '[Action]', 'anything'),
        ])

    @parameterized.expand([
        ('exact', 'ping\n', 'pong'),
        ('sha256', 'hashed', 'by hash'),
        ('contains', 'x\n[Action]\ny', 'anything'),
    ])
    def test_matching(self, _, prompt, reply):
        self.assertEqual(self.backend.complete(request(prompt)).text, reply)

    def test_unscripted_prompt(self):
        with self.assertRaises(UnscriptedPrompt) as cm:
            self.backend.complete(request('ping'))
        self.assertEqual(cm.exception.digest, prompt_hash('ping'))

    def test_records_prompts_in_order(self):
        self.backend.complete(request('ping\n'))
        self.backend.complete(request('hashed'))
        self.assertEqual(self.backend.received, ('ping\n', 'hashed'))

    def test_concurrent_calls(self):
        backend = EchoBackend('ok')
        prompts = ['prompt {}'.format(index) for index in range(50)]
        with ThreadPoolExecutor(max_workers=8) as pool:
            replies = list(pool.map(lambda prompt: backend.complete(request(prompt)).text, prompts))
        self.assertEqual(replies, ['ok'] * 50)
        self.assertEqual(sorted(backend.received), sorted(prompts))

    def test_script_file(self):
        backend = ScriptedBackend.from_file(corpus_path('generate_plan.mock.json'))
        self.assertEqual(backend.entries[0].match, 'contains')
        self.assertEqual(backend.entries[0].pattern, '[Action]\ngenerate_plan')

    def test_invalid_script(self):
        with self.assertRaises(serializers.ValidationError):
            ScriptedBackend.from_data([{'match': 'regex', 'pattern': '.*', 'reply': 'x'}])


class TestCompletionRequest(SimpleTestCase):

    @parameterized.expand([
        ('temperature', {'temperature': 2.5}),
        ('max_tokens', {'max_tokens': 0}),
        ('timeout', {'timeout': 0}),
    ])
    def test_bounds(self, _, overrides):
        with self.assertRaises(serializers.ValidationError):
            CompletionRequest('p', model='m', **overrides)

    @override_settings(MTSEM_MODEL='local-model', MTSEM_TEMPERATURE=0.7, MTSEM_MAX_TOKENS=64, MTSEM_TIMEOUT=3)
    def test_from_settings(self):
        self.assertEqual(
            CompletionRequest.from_settings('p'),
            CompletionRequest('p', model='local-model', temperature=0.7, max_tokens=64, timeout=3),
        )


class TestGetBackend(SimpleTestCase):

    def test_echo(self):
        backend = get_backend('echo:AgentTypes.END')
        self.assertIsInstance(backend, EchoBackend)
        self.assertEqual(backend.complete(request('p')).text, 'AgentTypes.END')

    def test_mock(self):
        with tempfile.TemporaryDirectory() as directory:
            script = os.path.join(directory, 'script.json')
            with open(script, 'w', encoding='utf-8') as handle:
                json.dump([{'match': 'exact', 'pattern': 'p', 'reply': 'r'}], handle)
            backend = get_backend('mock:' + script)
        self.assertEqual(backend.complete(request('p')).text, 'r')

    @override_settings(MTSEM_API_BASE='http://llm.internal/v1/')
    def test_http(self):
        backend = get_backend('http')
        self.assertIsInstance(backend, HttpBackend)
        self.assertEqual(backend.url, 'http://llm.internal/v1/chat/completions')

    @parameterized.expand([('empty_mock', 'mock:'), ('unknown', 'grpc')])
    def test_invalid(self, _, spec):
        with self.assertRaises(ValueError):
            get_backend(spec)

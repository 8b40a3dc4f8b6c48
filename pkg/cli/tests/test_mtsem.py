import json
import os
import socket
import tempfile
from io import StringIO
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings
from parameterized import parameterized

from backend.mock import EchoBackend, ScriptedBackend
from cli import EXIT_BACKEND, EXIT_COMPILE_ERROR, EXIT_RESPONSE_PARSE, EXIT_RESPONSE_TYPE, EXIT_USAGE
from frontend.tests.corpus import corpus_path
from promptgen.tests.fixtures import read_golden

PLAN_ARGS = corpus_path('generate_plan.args.json')
PLAN_MOCK = 'mock:' + corpus_path('generate_plan.mock.json')


class CommandTestCase(SimpleTestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def write(self, name, content):
        path = os.path.join(self.directory.name, name)
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(content)
        return path

    def run_command(self, *args):
        stdout, stderr = StringIO(), StringIO()
        call_command('mtsem', *args, stdout=stdout, stderr=stderr)
        return stdout.getvalue(), stderr.getvalue()

    def assertExitCode(self, code, *args):
        stderr = StringIO()
        with self.assertRaises(CommandError) as cm:
            call_command('mtsem', *args, stdout=StringIO(), stderr=stderr)
        self.assertEqual(cm.exception.returncode, code)
        return str(cm.exception), stderr.getvalue()


class TestCheck(CommandTestCase):

    def test_clean_source(self):
        self.assertEqual(self.run_command('check', corpus_path('plan.mtl')), ('', ''))

    def test_duplicate_sem(self):
        source = self.write('dup.mtl', 'class A { x: int; }\nsem A.x = "one";\nsem A.x = "two";\n')
        _, stderr = self.assertExitCode(EXIT_COMPILE_ERROR, 'check', source)
        self.assertIn('{}:3:1: error: duplicate sem'.format(source), stderr)
        self.assertIn('{}:2:1: note: first sem'.format(source), stderr)

    def test_syntax_error(self):
        source = self.write('bad.mtl', 'class A {\n  x int;\n}\n')
        _, stderr = self.assertExitCode(EXIT_COMPILE_ERROR, 'check', source)
        self.assertIn('{}:2:5: error: expected'.format(source), stderr)

    def test_missing_file(self):
        self.assertExitCode(EXIT_USAGE, 'check', os.path.join(self.directory.name, 'absent.mtl'))


class TestDumps(CommandTestCase):

    def test_dump_symbols(self):
        stdout, _ = self.run_command('dump-symbols', corpus_path('plan_sem.mtl'))
        rows = json.loads(stdout)
        self.assertEqual(rows[0]['path'], 'Plan')
        self.assertEqual(len(rows), 15)

    def test_dump_mtir(self):
        stdout, _ = self.run_command('dump-mtir', corpus_path('plan.mtl'), '--fn', 'generate_plan')
        document = json.loads(stdout)
        self.assertEqual(document['name'], 'generate_plan')
        self.assertEqual(document['output'], {'type': 'list[Plan]'})

    def test_dump_mtir_requires_fn(self):
        message, _ = self.assertExitCode(EXIT_USAGE, 'dump-mtir', corpus_path('plan.mtl'))
        self.assertIn('fn', message)

    def test_unknown_function(self):
        self.assertExitCode(EXIT_COMPILE_ERROR, 'dump-mtir', corpus_path('plan.mtl'), '--fn', 'nope')

    def test_dump_prompt(self):
        stdout, _ = self.run_command(
            'dump-prompt', corpus_path('plan.mtl'), '--fn', 'generate_plan', '--args', PLAN_ARGS)
        self.assertEqual(stdout, read_golden('generate_plan.nosem.prompt.txt'))

    def test_dump_prompt_docstring_mode(self):
        args = self.write('args.json', json.dumps({
            'utterance': 'hi', 'current_state': {'$enum': 'WorkflowStage', 'variant': 'PLANNING'},
        }))
        stdout, _ = self.run_command('dump-prompt', corpus_path('content_creator_docstring.mtl'),
                                     '--fn', 'call_next_agent', '--args', args, '--semantics', 'docstring')
        self.assertEqual(stdout.count('In this Enum:'), 1)
        self.assertLess(stdout.index('In this Enum:'), stdout.index('  AgentTypes.PLANNER_AGENT,'))

    def test_binding_error(self):
        args = self.write('args.json', json.dumps({'goal': 3}))
        message, _ = self.assertExitCode(EXIT_USAGE, 'dump-prompt', corpus_path('plan.mtl'),
                                         '--fn', 'generate_plan', '--args', args)
        self.assertEqual(message, 'goal: expected str, got int')

    def test_malformed_argument_file(self):
        args = self.write('args.json', '{not json')
        self.assertExitCode(EXIT_USAGE, 'dump-prompt', corpus_path('plan.mtl'), '--fn', 'generate_plan',
                            '--args', args)

    def test_deterministic(self):
        args = ('dump-prompt', corpus_path('plan_sem.mtl'), '--fn', 'generate_plan', '--args', PLAN_ARGS)
        first = self.run_command(*args)
        for _ in range(10):
            self.assertEqual(self.run_command(*args), first)


class TestInvoke(CommandTestCase):

    def invoke_args(self, *extra):
        return ('invoke', corpus_path('plan.mtl'), '--fn', 'generate_plan', '--args', PLAN_ARGS) + extra

    def test_scripted_plan_as_json(self):
        stdout, _ = self.run_command(*self.invoke_args('--backend', PLAN_MOCK, '--format', 'json'))
        plans = json.loads(stdout)
        self.assertEqual(len(plans), 1)
        self.assertEqual(plans[0]['$type'], 'Plan')
        self.assertEqual(plans[0]['file'], 'api/handlers.py')

    def test_text_output(self):
        stdout, _ = self.run_command(*self.invoke_args('--backend', PLAN_MOCK))
        self.assertTrue(stdout.startswith("[Plan(action = 'Add a logging middleware"))

    def test_deterministic_json(self):
        args = self.invoke_args('--backend', PLAN_MOCK, '--format', 'json')
        first, _ = self.run_command(*args)
        for _ in range(10):
            stdout, _ = self.run_command(*args)
            self.assertEqual(stdout, first)

    @override_settings(MTSEM_HTTP_ATTEMPTS=0)
    def test_zero_http_attempts(self):
        message, _ = self.assertExitCode(EXIT_USAGE, *self.invoke_args('--backend', 'http'))
        self.assertIn('HTTP attempts must be at least 1', message)

    def test_backend_receives_dump_prompt_bytes(self):
        dumped, _ = self.run_command(
            'dump-prompt', corpus_path('plan.mtl'), '--fn', 'generate_plan', '--args', PLAN_ARGS)
        backend = ScriptedBackend.from_file(corpus_path('generate_plan.mock.json'))
        with mock.patch('cli.management.commands.mtsem.get_backend', return_value=backend):
            self.run_command(*self.invoke_args('--backend', 'http'))
        self.assertEqual(backend.received, (dumped,))

    def test_parse_failure(self):
        message, _ = self.assertExitCode(EXIT_RESPONSE_PARSE, *self.invoke_args('--backend', 'echo:no idea',
                                                                                '--retries', '0'))
        self.assertIn('response parse error', message)

    def test_type_failure(self):
        message, _ = self.assertExitCode(EXIT_RESPONSE_TYPE, *self.invoke_args(
            '--backend', "echo:[Plan(action = 1, category = 'c', description = 'd')]", '--retries', '0'))
        self.assertIn('list[Plan][0].action', message)

    def test_retries_then_parse_failure(self):
        backend = EchoBackend('[]x')
        with mock.patch('cli.management.commands.mtsem.get_backend', return_value=backend):
            self.assertExitCode(EXIT_RESPONSE_PARSE, *self.invoke_args('--retries', '2'))
        self.assertEqual(len(backend.received), 3)

    def test_backend_failure(self):
        script = self.write('script.json', '[]')
        message, _ = self.assertExitCode(EXIT_BACKEND, *self.invoke_args('--backend', 'mock:' + script))
        self.assertIn('unscripted prompt', message)

    @parameterized.expand([('bare_mock', 'mock'), ('empty_mock', 'mock:')])
    def test_mock_requires_script(self, _, backend):
        message, _ = self.assertExitCode(EXIT_USAGE, *self.invoke_args('--backend', backend))
        self.assertIn('script path', message)

    def test_mock_never_touches_the_network(self):
        with mock.patch.object(socket.socket, 'connect', side_effect=AssertionError('network used')):
            stdout, _ = self.run_command(*self.invoke_args('--backend', PLAN_MOCK, '--format', 'json'))
        self.assertEqual(len(json.loads(stdout)), 1)

import json
import logging

from django.core.management.base import BaseCommand, CommandError

from backend.exceptions import BackendError
from backend.factory import get_backend
from frontend.exceptions import CompileError
from mtir import SEMANTICS_MODES
from mtir.serializers import serialize_mtir
from promptgen.binding import bind_arguments
from promptgen.codec import value_to_json
from promptgen.exceptions import ResponseParseError, ResponseTypeError, first_error
from promptgen.prompt import assemble_prompt
from promptgen.runtime import invoke
from promptgen.values import render_value
from rest_framework import serializers
from semtable.serializers import dump_symbols

from cli import CHECK, DUMP_MTIR, DUMP_PROMPT, DUMP_SYMBOLS, EXIT_USAGE, FORMAT_JSON, FORMAT_TEXT, FORMATS, INVOKE
from cli.config import CliConfigSerializer
from cli.pipeline import compile_source, exit_code_for, load_arguments, load_mtir, read_source

logger = logging.getLogger(__name__)


def _dumps(data):
    return json.dumps(data, ensure_ascii=False, separators=(',', ':'))


class Command(BaseCommand):
    help = 'Compile MTL sources, inspect their MT-IR and prompts, and invoke by-llm functions.'
    requires_system_checks = []

    def add_arguments(self, parser):
        subcommands = parser.add_subparsers(dest='subcommand', required=True)

        def subcommand(name, help, callsite=False):
            sub = subcommands.add_parser(name, help=help, called_from_command_line=parser.called_from_command_line)
            sub.add_argument('source', help='MTL source file')
            sub.add_argument('--semantics', choices=SEMANTICS_MODES, help='where SemTexts come from')
            if callsite:
                sub.add_argument('--fn', help='by-llm function, or Class.method')
            return sub

        subcommand(CHECK, 'report compile errors')
        subcommand(DUMP_SYMBOLS, 'print the SemTable as JSON')
        subcommand(DUMP_MTIR, 'print the enriched MT-IR of one call-site', callsite=True)
        for name, help in ((DUMP_PROMPT, 'print the prompt for one call'), (INVOKE, 'run one call')):
            sub = subcommand(name, help, callsite=True)
            sub.add_argument('--args', help='JSON argument file')
            sub.add_argument('--show-defaults', action='store_true', default=None, dest='show_defaults')
        invoke_parser = subcommands.choices[INVOKE]
        invoke_parser.add_argument('--backend', help='http, mock:<script.json> or echo:<reply>')
        invoke_parser.add_argument('--retries', type=int)
        invoke_parser.add_argument('--format', choices=FORMATS, default=FORMAT_TEXT)

    def handle(self, *args, **options):
        data = {
            name: options.get(name)
            for name in ('subcommand', 'source', 'fn', 'args', 'semantics', 'backend', 'retries', 'show_defaults')
        }
        data['format'] = options.get('format') or FORMAT_TEXT
        serializer = CliConfigSerializer(data=data)
        if not serializer.is_valid():
            path, message = first_error(serializers.ValidationError(serializer.errors))
            raise CommandError('{}: {}'.format(path, message), returncode=EXIT_USAGE)
        config = serializer.save()
        try:
            self.run(config)
        except CompileError as exc:
            self.stderr.write('\n'.join(exc.diagnostics(config.source)))
            raise CommandError('compilation failed', returncode=exit_code_for(exc))
        except ResponseParseError as exc:
            raise CommandError('response parse error: {}'.format(exc.detail), returncode=exit_code_for(exc))
        except ResponseTypeError as exc:
            raise CommandError('response type error at {}'.format(exc), returncode=exit_code_for(exc))
        except BackendError as exc:
            raise CommandError('backend failure: {}'.format(exc), returncode=exit_code_for(exc))
        except serializers.ValidationError as exc:
            path, message = first_error(exc)
            raise CommandError('{}: {}'.format(path, message) if path else message, returncode=exit_code_for(exc))
        except (OSError, ValueError) as exc:
            raise CommandError(str(exc), returncode=exit_code_for(exc))

    def run(self, config):
        compilation = compile_source(read_source(config.source))
        if config.subcommand == CHECK:
            return
        if config.subcommand == DUMP_SYMBOLS:
            self.stdout.write(_dumps(dump_symbols(compilation.semtable)))
            return
        ir = load_mtir(compilation, config.fn, config.semantics)
        if config.subcommand == DUMP_MTIR:
            self.stdout.write(serialize_mtir(ir))
            return
        bound = bind_arguments(ir, load_arguments(config.args))
        if config.subcommand == DUMP_PROMPT:
            self.stdout.write(assemble_prompt(ir, bound, show_defaults=config.show_defaults).render(), ending='')
            return
        result = invoke(ir, bound, get_backend(config.backend), retries=config.retries,
                        show_defaults=config.show_defaults)
        logger.info('%s answered after %d attempt(s)', ir.path, result.attempts)
        if config.format == FORMAT_JSON:
            self.stdout.write(_dumps(value_to_json(result.value)))
        else:
            self.stdout.write(render_value(result.value))

"""Glue between the command line and the compiler/runtime passes."""
import json
import logging
from dataclasses import dataclass

from rest_framework import serializers

from backend.exceptions import BackendError
from frontend.exceptions import CompileError
from frontend.nodes import SourceProgram
from frontend.parser import find_callsite, parse_source
from mtir.builder import build_base_mtir, enrich_mtir
from promptgen.codec import arguments_from_json
from promptgen.exceptions import ResponseParseError, ResponseTypeError
from semtable.builder import build_semtable, build_symbol_table
from semtable.symbols import SemTable

from . import EXIT_BACKEND, EXIT_COMPILE_ERROR, EXIT_RESPONSE_PARSE, EXIT_RESPONSE_TYPE, EXIT_USAGE

logger = logging.getLogger(__name__)

# Checked in order: ResponseTypeError is a ValidationError
EXIT_CODES = (
    (CompileError, EXIT_COMPILE_ERROR),
    (ResponseParseError, EXIT_RESPONSE_PARSE),
    (ResponseTypeError, EXIT_RESPONSE_TYPE),
    (BackendError, EXIT_BACKEND),
    (serializers.ValidationError, EXIT_USAGE),
    (OSError, EXIT_USAGE),
    (ValueError, EXIT_USAGE),
)


def exit_code_for(exc):
    for error_class, code in EXIT_CODES:
        if isinstance(exc, error_class):
            return code
    raise exc


@dataclass(frozen=True)
class Compilation:
    program: SourceProgram
    symtable: SemTable
    semtable: SemTable


def read_source(path):
    with open(path, encoding='utf-8') as source:
        return source.read()


def compile_source(source):
    """Run the front end and both table passes; CompileError on the first problem."""
    program = parse_source(source)
    symtable = build_symbol_table(program)
    semtable = build_semtable(program, symtable)
    logger.info('compiled %d declarations', len(program.declarations))
    return Compilation(program, symtable, semtable)


def load_mtir(compilation, name, semantics):
    owner, callsite = find_callsite(compilation.program, name)
    base = build_base_mtir(callsite, compilation.semtable, owner)
    return enrich_mtir(base, compilation.semtable, semantics)


def load_arguments(path):
    """Name to RuntimeValue from a JSON argument file; no file means no arguments."""
    if path is None:
        return {}
    with open(path, encoding='utf-8') as args:
        return arguments_from_json(json.load(args))

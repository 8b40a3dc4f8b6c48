import json
import os

from frontend.parser import find_callsite, parse_source
from frontend.tests.corpus import corpus_path, read_corpus
from mtir.builder import build_base_mtir, enrich_mtir
from promptgen.binding import bind_arguments
from promptgen.codec import arguments_from_json
from semtable.builder import build_semtable, build_symbol_table

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'goldens')


def star_from_source(source, name, semantics='sem'):
    program = parse_source(source)
    table = build_semtable(program, build_symbol_table(program))
    owner, callsite = find_callsite(program, name)
    return enrich_mtir(build_base_mtir(callsite, table, owner), table, semantics)


def load_star(corpus_name, name, semantics='sem'):
    return star_from_source(read_corpus(corpus_name), name, semantics)


def load_arguments(name):
    with open(corpus_path(name), encoding='utf-8') as args:
        return arguments_from_json(json.load(args))


def bound_plan_arguments(star):
    return bind_arguments(star, load_arguments('generate_plan.args.json'))


def read_golden(name):
    with open(os.path.join(GOLDEN_DIR, name), encoding='utf-8') as golden:
        return golden.read()

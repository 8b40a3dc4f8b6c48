"""Seeded, grammar-directed random MTL programs for property tests.

Every generated program is well formed: all referenced types are declared,
names are unique per scope and sem targets resolve. Class graphs may be
cyclic and generic arguments nest at most ``MAX_GENERIC_DEPTH`` deep.
"""
import random

from frontend import GENERIC_ARITY, PRIMITIVE_TYPES
from frontend.nodes import (
    AttrDecl,
    ByLlm,
    ClassDecl,
    EnumDecl,
    EnumVariant,
    FuncDecl,
    GenericType,
    GlobalDecl,
    Literal,
    LITERAL_BOOL,
    LITERAL_FLOAT,
    LITERAL_INT,
    LITERAL_LIST,
    LITERAL_NONE,
    LITERAL_STR,
    NamedType,
    OpaqueBody,
    Param,
    SemDecl,
    SourceProgram,
)

MAX_TYPES = 6
MAX_GENERIC_DEPTH = 3
SEED = 20251018
PROGRAM_COUNT = 500

WORDS = ['alpha', 'beta', 'gamma', 'delta', 'route', 'review', 'stage', 'plan']
TEXT_PIECES = WORDS + ['"quoted"', 'back\\slash', 'line\nbreak', 'tab\there', 'ünïcode']
PRIMITIVES = sorted(PRIMITIVE_TYPES)
GENERICS = sorted(GENERIC_ARITY)


class ProgramGenerator:

    def __init__(self, rng):
        self.rng = rng

    def text(self, multiline=True):
        pieces = TEXT_PIECES if multiline else WORDS
        return ' '.join(self.rng.choice(pieces) for _ in range(self.rng.randint(1, 4)))

    def type_expr(self, type_names, depth=0):
        roll = self.rng.random()
        if depth < MAX_GENERIC_DEPTH and roll < 0.3:
            name = self.rng.choice(GENERICS)
            if name == 'dict':
                args = (NamedType('str'), self.type_expr(type_names, depth + 1))
            else:
                args = (self.type_expr(type_names, depth + 1),)
            return GenericType(name, args)
        if type_names and roll < 0.65:
            return NamedType(self.rng.choice(type_names))
        return NamedType(self.rng.choice(PRIMITIVES))

    def default_for(self, type_expr):
        if not self.rng.random() < 0.25:
            return None
        if isinstance(type_expr, GenericType):
            if type_expr.name == 'Optional':
                return Literal(LITERAL_NONE, None)
            if type_expr.name == 'list':
                return Literal(LITERAL_LIST, ())
            return None
        if type_expr.name == 'str':
            return Literal(LITERAL_STR, self.text())
        if type_expr.name == 'int':
            return Literal(LITERAL_INT, self.rng.randint(0, 99))
        if type_expr.name == 'float':
            if self.rng.random() < 0.5:
                return Literal(LITERAL_FLOAT, self.rng.randint(0, 400) / 4)
            return Literal(LITERAL_FLOAT, self.rng.randint(1, 9) * 10.0 ** self.rng.randint(-12, 22))
        if type_expr.name == 'bool':
            return Literal(LITERAL_BOOL, self.rng.random() < 0.5)
        return None

    def params(self, type_names):
        params = []
        for index in range(self.rng.randint(0, 3)):
            type_expr = self.type_expr(type_names)
            params.append(Param('p{}'.format(index), type_expr, self.default_for(type_expr)))
        return tuple(params)

    def function(self, name, type_names, by_llm=True):
        docstring = self.text(multiline=False) if by_llm and self.rng.random() < 0.3 else None
        return FuncDecl(
            name,
            self.params(type_names),
            self.type_expr(type_names),
            ByLlm() if by_llm else OpaqueBody(),
            docstring,
        )

    def class_decl(self, name, type_names):
        attrs = []
        for index in range(self.rng.randint(0, 4)):
            type_expr = self.type_expr(type_names)
            attrs.append(AttrDecl('a{}'.format(index), type_expr, self.default_for(type_expr)))
        methods = tuple(
            self.function('m{}'.format(index), type_names, by_llm=self.rng.random() < 0.7)
            for index in range(self.rng.randint(0, 2))
        )
        docstring = self.text(multiline=False) if self.rng.random() < 0.3 else None
        return ClassDecl(name, tuple(attrs), methods, docstring)

    def enum_decl(self, name):
        variants = tuple(EnumVariant('V{}'.format(index)) for index in range(self.rng.randint(1, 4)))
        docstring = self.text(multiline=False) if self.rng.random() < 0.3 else None
        return EnumDecl(name, variants, docstring)

    def sem_targets(self, declarations):
        for decl in declarations:
            if isinstance(decl, ClassDecl):
                yield (decl.name,)
                for attr in decl.attrs:
                    yield decl.name, attr.name
                for method in decl.methods:
                    yield decl.name, method.name
            elif isinstance(decl, EnumDecl):
                yield (decl.name,)
                for variant in decl.variants:
                    yield decl.name, variant.name
            elif isinstance(decl, FuncDecl):
                yield (decl.name,)
                for param in decl.params:
                    yield decl.name, param.name
            elif isinstance(decl, GlobalDecl):
                yield (decl.name,)

    def program(self, with_sems=True):
        type_names = ['T{}'.format(index) for index in range(self.rng.randint(1, MAX_TYPES))]
        declarations = [
            self.class_decl(name, type_names) if self.rng.random() < 0.6 else self.enum_decl(name)
            for name in type_names
        ]
        declarations.extend(self.function('f{}'.format(index), type_names) for index in range(self.rng.randint(1, 2)))
        if self.rng.random() < 0.3:
            declarations.append(self.function('helper', type_names, by_llm=False))
        if self.rng.random() < 0.3:
            declarations.append(GlobalDecl('g0', self.type_expr(type_names)))
        if with_sems:
            targets = list(self.sem_targets(declarations))
            chosen = self.rng.sample(targets, self.rng.randint(0, min(4, len(targets))))
            declarations.extend(SemDecl(target, self.text()) for target in chosen)
        self.rng.shuffle(declarations)
        return SourceProgram(tuple(declarations))


def generate_programs(count=PROGRAM_COUNT, seed=SEED, with_sems=True):
    generator = ProgramGenerator(random.Random(seed))
    return [generator.program(with_sems) for _ in range(count)]

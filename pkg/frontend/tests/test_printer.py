from django.test import SimpleTestCase
from parameterized import parameterized

from frontend.parser import parse_source
from frontend.printer import pretty_print

from .generators import generate_programs
from .corpus import read_corpus


class TestPrettyPrint(SimpleTestCase):

    def test_corpus_round_trip(self):
        for name in ('plan.mtl', 'plan_sem.mtl', 'content_creator_sem.mtl', 'content_creator_docstring.mtl'):
            program = parse_source(read_corpus(name))
            self.assertEqual(parse_source(pretty_print(program)), program, name)

    def test_printed_form_is_a_fixed_point(self):
        program = parse_source(read_corpus('plan_sem.mtl'))
        text = pretty_print(program)
        self.assertEqual(pretty_print(parse_source(text)), text)

    def test_layout(self):
        program = parse_source('enum E { A, B } def f(x: int = 3) -> E by llm; def g() -> int { 1 }')
        self.assertEqual(pretty_print(program), (
            'enum E {\n'
            '    A,\n'
            '    B\n'
            '}\n'
            '\n'
            'def f(x: int = 3) -> E by llm;\n'
            '\n'
            'def g() -> int { ... }\n'
        ))

    def test_generated_programs_round_trip(self):
        for index, program in enumerate(generate_programs()):
            with self.subTest(program=index):
                self.assertEqual(parse_source(pretty_print(program)), program)

    @parameterized.expand([
        ('small', '0.00001', '0.00001'),
        ('large', '100000000000000000000.0', '100000000000000000000.0'),
        ('plain', '2.50', '2.5'),
        ('zero', '0.0', '0.0'),
    ])
    def test_float_defaults_print_positionally(self, _, source_value, printed_value):
        program = parse_source('class A {{ x: float = {}; }}'.format(source_value))
        text = pretty_print(program)
        self.assertIn('x: float = {};'.format(printed_value), text)
        self.assertEqual(parse_source(text), program)

KEYWORD = 'keyword'
IDENTIFIER = 'identifier'
STRING = 'string-literal'
INT = 'int-literal'
FLOAT = 'float-literal'
PUNCTUATION = 'punctuation'
END_OF_INPUT = 'end-of-input'

KEYWORDS = frozenset([
    'class',
    'enum',
    'def',
    'sem',
    'let',
    'by',
    'llm',
    'true',
    'false',
    'None',
])

DECLARATION_KEYWORDS = ('class', 'enum', 'def', 'sem', 'let')

PRIMITIVE_TYPES = frozenset(['str', 'int', 'float', 'bool'])

# Builtin generic name -> number of type arguments
GENERIC_ARITY = {
    'list': 1,
    'dict': 2,
    'Optional': 1,
}

STRING_ESCAPES = {
    '"': '"',
    '\\': '\\',
    'n': '\n',
    't': '\t',
}

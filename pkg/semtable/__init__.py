MODULE = 'module'
CLASS = 'class'
ENUM = 'enum'
ENUM_VARIANT = 'enum-variant'
FUNCTION = 'function'
METHOD = 'method'
PARAM = 'param'
ATTRIBUTE = 'attribute'
GLOBAL = 'global'

SYMBOL_KINDS = [
    (MODULE, 'Module'),
    (CLASS, 'Class'),
    (ENUM, 'Enum'),
    (ENUM_VARIANT, 'Enum variant'),
    (FUNCTION, 'Function'),
    (METHOD, 'Method'),
    (PARAM, 'Parameter'),
    (ATTRIBUTE, 'Attribute'),
    (GLOBAL, 'Global'),
]

TYPED_KINDS = frozenset([PARAM, ATTRIBUTE, GLOBAL])

# Hierarchy entry kinds, named the way Type_Explanations labels them
OBJECT = 'obj'
ENUM = 'enum'
GENERIC = 'generic'

# Where SemTexts come from
SEMANTICS_SEM = 'sem'
SEMANTICS_DOCSTRING = 'docstring'
SEMANTICS_BOTH = 'both'

SEMANTICS_MODES = [
    (SEMANTICS_SEM, 'sem declarations only'),
    (SEMANTICS_DOCSTRING, 'docstrings only'),
    (SEMANTICS_BOTH, 'sem declarations, falling back to docstrings'),
]

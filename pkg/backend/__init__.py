MATCH_EXACT = 'exact'
MATCH_CONTAINS = 'contains'
MATCH_SHA256 = 'sha256'

MATCH_KINDS = [
    (MATCH_EXACT, 'Prompt equals pattern'),
    (MATCH_CONTAINS, 'Prompt contains pattern'),
    (MATCH_SHA256, 'sha256 hex digest of the prompt equals pattern'),
]

# Status codes retried with exponential backoff
RETRY_STATUS = frozenset([429, 500, 502, 503, 504])

BODY_EXCERPT_LENGTH = 500

# Process exit codes of ``manage.py mtsem``
EXIT_COMPILE_ERROR = 1
EXIT_USAGE = 2
EXIT_RESPONSE_PARSE = 3
EXIT_RESPONSE_TYPE = 4
EXIT_BACKEND = 5

CHECK = 'check'
DUMP_SYMBOLS = 'dump-symbols'
DUMP_MTIR = 'dump-mtir'
DUMP_PROMPT = 'dump-prompt'
INVOKE = 'invoke'
SUBCOMMANDS = [CHECK, DUMP_SYMBOLS, DUMP_MTIR, DUMP_PROMPT, INVOKE]
# Subcommands that operate on one by-llm call-site
CALLSITE_SUBCOMMANDS = {DUMP_MTIR, DUMP_PROMPT, INVOKE}

FORMAT_TEXT = 'text'
FORMAT_JSON = 'json'
FORMATS = [FORMAT_TEXT, FORMAT_JSON]

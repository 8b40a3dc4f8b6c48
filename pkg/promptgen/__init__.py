SYSTEM_PROMPT = (
    'This is an operation you must perform and return the output values.\n'
    'Follow the provided Input, Output, and Type information.\n'
    'Do not explain. Do not add commentary. Return only the output value(s).'
)

OUTPUT_INSTRUCTION = (
    'Generate and return the output result(s) only, adhering to the provided Type in the following format'
)

OUTPUT_MARKER = '[Output]\n<result>'

# Followed by the SemText as a double-quoted, escaped string
SEMTEXT_SUFFIX = ' -- {}'

# Tags of the JSON argument/result encoding
JSON_TYPE_TAG = '$type'
JSON_ENUM_TAG = '$enum'
JSON_VARIANT_KEY = 'variant'

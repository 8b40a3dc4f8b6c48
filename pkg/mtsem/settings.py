"""
Django settings for the mtsem project.

The project serves no web routes; Django provides configuration, the
``manage.py mtsem`` command and the test runner.

All MTSEM_* values may be overridden from the environment.
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

SECRET_KEY = os.getenv('SECRET_KEY', 'mtsem-local-only-key')

DEBUG = bool(os.getenv('DEBUG', False))
ALLOWED_HOSTS = ['localhost', '127.0.0.1']

# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'frontend',
    'semtable',
    'mtir',
    'promptgen',
    'backend',
    'cli',
]

MIDDLEWARE = []

# Only the backend tests mount routes (a stub chat-completions endpoint).
ROOT_URLCONF = 'mtsem.urls'

USE_TZ = False

STATIC_URL = '/static/'

# Logging goes to stderr; stdout is reserved for command output.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(levelname)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': os.getenv('MTSEM_LOG_LEVEL', 'WARNING'),
        }
        for app in ('frontend', 'semtable', 'mtir', 'promptgen', 'backend', 'cli')
    },
}

# Completion backend
# OpenAI-compatible endpoint, e.g. 'https://api.openai.com/v1' or a local server (without last slash)
MTSEM_API_BASE = os.getenv('MTSEM_API_BASE', 'http://localhost:8000/v1')
MTSEM_API_KEY = os.getenv('MTSEM_API_KEY', '')
MTSEM_MODEL = os.getenv('MTSEM_MODEL', 'gpt-4o')
MTSEM_TEMPERATURE = float(os.getenv('MTSEM_TEMPERATURE', '0.0'))
MTSEM_MAX_TOKENS = int(os.getenv('MTSEM_MAX_TOKENS', '1024'))
# Seconds
MTSEM_TIMEOUT = float(os.getenv('MTSEM_TIMEOUT', '60'))
MTSEM_HTTP_ATTEMPTS = int(os.getenv('MTSEM_HTTP_ATTEMPTS', '4'))
MTSEM_BACKOFF_SECONDS = float(os.getenv('MTSEM_BACKOFF_SECONDS', '1.0'))

# Runtime
# How many times a rejected response is re-asked before giving up
MTSEM_RETRIES = int(os.getenv('MTSEM_RETRIES', '2'))
# One of 'sem', 'docstring', 'both'
MTSEM_SEMANTICS = os.getenv('MTSEM_SEMANTICS', 'sem')
MTSEM_SHOW_DEFAULTS = bool(os.getenv('MTSEM_SHOW_DEFAULTS', False))
# 'http', 'mock:<script.json>' or 'echo:<reply>'
MTSEM_BACKEND = os.getenv('MTSEM_BACKEND', 'http')

"""Configure Django so the test suite can be collected and run by pytest."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'mtsem.settings')
django.setup()

from django.apps import AppConfig


class SemtableConfig(AppConfig):
    name = 'semtable'

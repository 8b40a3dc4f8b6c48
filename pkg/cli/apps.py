from django.apps import AppConfig


class CliAppConfig(AppConfig):
    name = 'cli'

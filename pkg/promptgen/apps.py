from django.apps import AppConfig


class PromptgenConfig(AppConfig):
    name = 'promptgen'

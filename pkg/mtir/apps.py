from django.apps import AppConfig


class MtirConfig(AppConfig):
    name = 'mtir'

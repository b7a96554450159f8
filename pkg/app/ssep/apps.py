from django.apps import AppConfig


class SsepConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'ssep'

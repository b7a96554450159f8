from django.apps import AppConfig


class FreeprobConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'freeprob'

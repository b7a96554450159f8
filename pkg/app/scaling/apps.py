from django.apps import AppConfig


class ScalingConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'scaling'

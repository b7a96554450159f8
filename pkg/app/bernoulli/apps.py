from django.apps import AppConfig


class BernoulliConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'bernoulli'

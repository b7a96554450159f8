"""
URL mappings for recorded verification runs
"""

from django.urls import path, include
from rest_framework.routers import DefaultRouter

from core import views

router = DefaultRouter()
router.register('runs', views.VerificationRunViewSet, basename='run')

app_name = 'core'

urlpatterns = [
    path('', include(router.urls))
]

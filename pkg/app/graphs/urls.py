"""
URL mapping for the graphs API
"""

from django.urls import path

from graphs import views


app_name = 'graphs'

urlpatterns = [
    path('chromatic/', views.ChromaticView.as_view(), name='chromatic'),
]

"""
URL mapping for the partitions API
"""

from django.urls import path

from partitions import views


app_name = 'partitions'

urlpatterns = [
    path('mobius/', views.MobiusView.as_view(), name='mobius'),
]

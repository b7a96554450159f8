"""
URL mapping for the SSEP API
"""

from django.urls import path

from ssep import views


app_name = 'ssep'

urlpatterns = [
    path('psi/', views.PsiView.as_view(), name='psi'),
    path('free-energy/', views.FreeEnergyView.as_view(), name='free-energy'),
    path('rate/', views.RateView.as_view(), name='rate'),
]

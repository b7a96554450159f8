from django.contrib import admin
from django.urls import path, include

from drf_spectacular.views import (
    SpectacularAPIView,
    SpectacularSwaggerView
)

urlpatterns = [
    path('admin/', admin.site.urls),
    path('api/schema/', SpectacularAPIView.as_view(), name='schema'),
    path(
        'api/docs/',
        SpectacularSwaggerView.as_view(url_name='schema'),
        name='api-docs'
    ),

    path('api/partitions/', include('partitions.urls')),
    path('api/graphs/', include('graphs.urls')),
    path('api/ssep/', include('ssep.urls')),
    path('api/verification/', include('core.urls')),
]

"""
Django admin customization
"""

from django.contrib import admin

from core import models


class VerificationRunAdmin(admin.ModelAdmin):
    ordering = ['-created']
    list_display = ['suite', 'passed', 'measured', 'tolerance', 'seed',
                    'elapsed', 'created']
    list_filter = ['suite', 'passed']
    readonly_fields = ['created']


admin.site.register(models.VerificationRun, VerificationRunAdmin)

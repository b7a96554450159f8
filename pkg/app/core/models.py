"""
Database models for the core app
"""

from django.db import models


class VerificationRun(models.Model):
    """ Recorded outcome of one acceptance suite """
    suite = models.CharField(max_length=64)
    passed = models.BooleanField()
    measured = models.FloatField(null=True, blank=True)
    tolerance = models.FloatField(null=True, blank=True)
    seed = models.IntegerField()
    elapsed = models.FloatField()
    details = models.JSONField(default=dict, blank=True)
    error = models.TextField(blank=True)
    created = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created', '-id']

    @classmethod
    def record(cls, result):
        """ Save a SuiteResult """
        return cls.objects.create(
            suite=result.name,
            passed=result.passed,
            measured=result.measured,
            tolerance=result.tolerance,
            seed=result.seed,
            elapsed=result.elapsed,
            details=result.details,
            error=result.error or '',
        )

    def __str__(self):
        status = 'passed' if self.passed else 'failed'
        return f'{self.suite} {status} (seed {self.seed})'

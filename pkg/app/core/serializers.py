"""
Serializers for run configuration and shared payloads
"""

from django.conf import settings
from rest_framework import serializers

from core.models import VerificationRun
from scaling.grid import MIN_INTERVALS, GridFunction


class RunConfigSerializer(serializers.Serializer):
    """ Numerical settings of a run, after defaults and overrides """
    grid_size = serializers.IntegerField(min_value=MIN_INTERVALS)
    fixed_point_tolerance = serializers.FloatField(min_value=0.0)
    max_iterations = serializers.IntegerField(min_value=1)
    damping = serializers.FloatField(min_value=0.0, max_value=1.0)
    stationarity_tolerance = serializers.FloatField(min_value=0.0)
    identity_tolerance = serializers.FloatField(min_value=0.0)
    n_max = serializers.IntegerField(min_value=1, max_value=6)
    shooting_bracket = serializers.ListField(
        child=serializers.FloatField(min_value=0.0),
        min_length=2,
        max_length=2,
    )
    legendre_starts = serializers.IntegerField(min_value=1)
    seed = serializers.IntegerField(min_value=0)
    output_format = serializers.ChoiceField(choices=['json', 'csv'])

    def validate_fixed_point_tolerance(self, value):
        if value <= 0:
            raise serializers.ValidationError('Tolerance must be positive.')
        return value

    def validate_damping(self, value):
        if value <= 0:
            raise serializers.ValidationError('Damping must be in (0, 1].')
        return value

    def validate_shooting_bracket(self, value):
        lower, upper = value
        if not 0 < lower < upper:
            raise serializers.ValidationError(
                'Bracket must satisfy 0 < lower < upper.'
            )
        return tuple(value)


class GridPayloadSerializer(serializers.Serializer):
    """ A profile on [0, 1]: explicit node values or a constant """
    values = serializers.ListField(
        child=serializers.FloatField(),
        min_length=MIN_INTERVALS + 1,
        required=False,
    )
    constant = serializers.FloatField(required=False)
    grid_size = serializers.IntegerField(
        min_value=MIN_INTERVALS,
        required=False,
    )

    def validate(self, attrs):
        if ('values' in attrs) == ('constant' in attrs):
            raise serializers.ValidationError(
                'Give exactly one of "values" or "constant".'
            )
        return attrs

    def to_grid(self):
        return grid_from_payload(self.validated_data)


def grid_from_payload(data):
    """ GridFunction from validated GridPayloadSerializer data """
    if 'values' in data:
        return GridFunction(data['values'])
    size = data.get('grid_size', settings.NUMERICS['GRID_SIZE'])
    return GridFunction.constant(data['constant'], size)


class VerificationRunSerializer(serializers.ModelSerializer):
    """ Serializer for recorded suite runs """

    class Meta:
        model = VerificationRun
        fields = [
            'id', 'suite', 'passed', 'measured', 'tolerance', 'seed',
            'elapsed', 'details', 'error', 'created',
        ]
        read_only_fields = fields


class SuiteRequestSerializer(serializers.Serializer):
    """ Suites to run now, with an optional seed """
    suites = serializers.ListField(
        child=serializers.CharField(), min_length=1,
    )
    seed = serializers.IntegerField(min_value=0, required=False)

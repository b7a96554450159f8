"""
Serializers for the SSEP API views
"""

from rest_framework import serializers

from core.serializers import GridPayloadSerializer
from ssep.kernels import CYCLIC_LIMIT


class PsiSerializer(serializers.Serializer):
    """ Points at which to evaluate ψ^ssep_n or ψ#_n """
    points = serializers.ListField(
        child=serializers.FloatField(),
        min_length=1,
        max_length=CYCLIC_LIMIT,
    )
    kind = serializers.ChoiceField(choices=['ssep', 'sharp'], default='ssep')


class FieldSerializer(serializers.Serializer):
    """ Field h for the free energy """
    h = GridPayloadSerializer()
    classical = serializers.BooleanField(default=False)


class DensitySerializer(serializers.Serializer):
    """ Density profile n for the rate function """
    n = GridPayloadSerializer()

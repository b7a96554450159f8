"""
Serializers for the graphs API
"""

from rest_framework import serializers

from graphs.chromatic import CHROMATIC_LIMIT


class SimpleGraphSerializer(serializers.Serializer):
    """ Graph on vertices 1..vertex_count """
    vertex_count = serializers.IntegerField(
        min_value=1,
        max_value=CHROMATIC_LIMIT,
    )
    edges = serializers.ListField(
        child=serializers.ListField(
            child=serializers.IntegerField(min_value=1),
            min_length=2,
            max_length=2,
        ),
        default=list,
    )

    def validate(self, attrs):
        for u, v in attrs['edges']:
            if u == v or max(u, v) > attrs['vertex_count']:
                raise serializers.ValidationError(
                    f'Edge ({u}, {v}) is not valid on '
                    f'{attrs["vertex_count"]} vertices.'
                )
        return attrs

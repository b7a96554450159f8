"""
Serializers for the partitions API
"""

from rest_framework import serializers

from core.exceptions import DomainError
from partitions.lattice import ENUMERATION_LIMIT, SetPartition


class PartitionField(serializers.Field):
    """ A set partition in list-of-lists form, e.g. [[1, 3], [2]] """

    def to_internal_value(self, data):
        try:
            return SetPartition.from_json(data)
        except DomainError as exc:
            raise serializers.ValidationError(str(exc))

    def to_representation(self, value):
        return value.to_json()


class MobiusSerializer(serializers.Serializer):
    """ An interval [lower, upper] of the partition lattice """
    lower = PartitionField()
    upper = PartitionField()
    lattice = serializers.ChoiceField(
        choices=['partitions', 'noncrossing'],
        default='partitions',
    )

    def validate(self, attrs):
        if attrs['lower'].n != attrs['upper'].n:
            raise serializers.ValidationError(
                'Both partitions must be of the same ground set.'
            )
        if attrs['lower'].n > ENUMERATION_LIMIT:
            raise serializers.ValidationError(
                f'Ground sets are capped at {ENUMERATION_LIMIT} elements.'
            )
        return attrs

"""
Views for the partitions API
"""

from drf_spectacular.utils import extend_schema, OpenApiTypes
from rest_framework.response import Response
from rest_framework.views import APIView

from partitions.lattice import mobius_nc, mobius_partition_lattice
from partitions.serializers import MobiusSerializer


class MobiusView(APIView):
    """ Möbius function of an interval of partitions """

    @extend_schema(request=MobiusSerializer, responses=OpenApiTypes.OBJECT)
    def post(self, request):
        serializer = MobiusSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        if data['lattice'] == 'noncrossing':
            value = mobius_nc(data['lower'], data['upper'])
        else:
            value = mobius_partition_lattice(data['lower'], data['upper'])
        return Response({
            'lower': data['lower'].to_json(),
            'upper': data['upper'].to_json(),
            'lattice': data['lattice'],
            'mobius': value,
        })

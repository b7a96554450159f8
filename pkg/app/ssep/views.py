"""
Views for the SSEP API
"""

from drf_spectacular.utils import extend_schema, OpenApiTypes
from rest_framework.response import Response
from rest_framework.views import APIView

from core.serializers import grid_from_payload
from ssep.classical import classical_F_ssep
from ssep.free_energy import F_ssep_free, rate_function_ssep
from ssep.kernels import psi_sharp, psi_ssep
from ssep.serializers import (
    DensitySerializer,
    FieldSerializer,
    PsiSerializer,
)


class PsiView(APIView):
    """ Scaled connected correlation at distinct points """

    @extend_schema(request=PsiSerializer, responses=OpenApiTypes.OBJECT)
    def post(self, request):
        serializer = PsiSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        points = serializer.validated_data['points']
        if serializer.validated_data['kind'] == 'sharp':
            value = psi_sharp(points)
        else:
            value = psi_ssep(points)
        return Response({'points': points, 'value': value})


class FreeEnergyView(APIView):
    """ F_ssep[h] from the free-probability variational problem """

    @extend_schema(request=FieldSerializer, responses=OpenApiTypes.OBJECT)
    def post(self, request):
        serializer = FieldSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        h = grid_from_payload(serializer.validated_data['h'])
        data = F_ssep_free(h).to_json()
        if serializer.validated_data['classical']:
            data['F_classical'] = classical_F_ssep(h).F_value
        return Response(data)


class RateView(APIView):
    """ Large-deviation rate I_ssep[n] of a density profile """

    @extend_schema(request=DensitySerializer, responses=OpenApiTypes.OBJECT)
    def post(self, request):
        serializer = DensitySerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        n = grid_from_payload(serializer.validated_data['n'])
        solution = rate_function_ssep(n)
        data = solution.to_json()
        data['I'] = data.pop('F')
        return Response(data)

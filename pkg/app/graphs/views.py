"""
Views for the graphs API
"""

from drf_spectacular.utils import extend_schema, OpenApiTypes
from rest_framework.response import Response
from rest_framework.views import APIView

from graphs.chromatic import chromatic_polynomial
from graphs.serializers import SimpleGraphSerializer
from graphs.structures import SimpleGraph


class ChromaticView(APIView):
    """ Chromatic polynomial and Möbius value of a simple graph """

    @extend_schema(
        request=SimpleGraphSerializer, responses=OpenApiTypes.OBJECT
    )
    def post(self, request):
        serializer = SimpleGraphSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        graph = SimpleGraph.from_json(serializer.validated_data)
        polynomial = chromatic_polynomial(graph)
        connected = graph.is_connected()
        return Response({
            'graph': graph.to_json(),
            'coefficients': list(polynomial.coefficients),
            'polynomial': str(polynomial),
            'connected': connected,
            'mobius': polynomial.coefficient(1) if connected else None,
        })

"""
Shared API plumbing for the computational endpoints and the views for
recorded verification runs
"""

import logging

from django.conf import settings
from drf_spectacular.utils import (
    extend_schema,
    extend_schema_view,
    OpenApiParameter,
    OpenApiTypes,
)
from rest_framework import mixins, status, viewsets
from rest_framework.decorators import action
from rest_framework.response import Response
from rest_framework.views import exception_handler

from core.exceptions import ComputationError
from core.models import VerificationRun
from core.serializers import SuiteRequestSerializer, VerificationRunSerializer
from core.verification import run_suites

logger = logging.getLogger(__name__)


def computation_exception_handler(exc, context):
    """ Render domain errors as 400 responses, defer everything else """
    if isinstance(exc, ComputationError):
        logger.info('rejected request: %s', exc)
        body = {'detail': str(exc), 'error': type(exc).__name__}
        details = {
            key: value for key, value in exc.details.items()
            if value is not None
        }
        if details:
            body['context'] = details
        return Response(body, status=status.HTTP_400_BAD_REQUEST)
    return exception_handler(exc, context)


@extend_schema_view(
    list=extend_schema(
        parameters=[
            OpenApiParameter(
                name='suite',
                type=OpenApiTypes.STR,
                description='Only runs of this suite',
                required=False,
            ),
            OpenApiParameter(
                name='passed',
                type=OpenApiTypes.INT,
                enum=[0, 1],
                description='Filter by outcome',
                required=False,
            ),
        ]
    )
)
class VerificationRunViewSet(mixins.ListModelMixin,
                             mixins.RetrieveModelMixin,
                             viewsets.GenericViewSet):
    """ Recorded acceptance suite runs """
    serializer_class = VerificationRunSerializer
    queryset = VerificationRun.objects.all()

    def get_queryset(self):
        queryset = self.queryset
        suite = self.request.query_params.get('suite')
        passed = self.request.query_params.get('passed')
        if suite:
            queryset = queryset.filter(suite=suite)
        if passed is not None:
            queryset = queryset.filter(passed=bool(int(passed)))
        return queryset

    def get_serializer_class(self):
        if self.action == 'run':
            return SuiteRequestSerializer
        return self.serializer_class

    @extend_schema(responses=VerificationRunSerializer(many=True))
    @action(methods=['POST'], detail=False, url_path='run')
    def run(self, request):
        """ Run suites now and record their results """
        serializer = self.get_serializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        seed = serializer.validated_data.get(
            'seed', settings.NUMERICS['SEED']
        )
        results = run_suites(serializer.validated_data['suites'], seed)
        runs = [VerificationRun.record(result) for result in results]
        return Response(
            VerificationRunSerializer(runs, many=True).data,
            status=status.HTTP_201_CREATED,
        )

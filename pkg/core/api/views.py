import logging

from django_filters.rest_framework import DjangoFilterBackend
from rest_framework import filters, status, viewsets
from rest_framework.decorators import action
from rest_framework.pagination import PageNumberPagination
from rest_framework.response import Response

from core.classify import hierarchy_class, is_inhabited, is_large, rank
from core.decide import Relation, decide
from core.exceptions import HierarchyError
from core.models import StoredCertificate
from core.pipelines import witness
from core.verify import verify_certificate

from .serializers import (
    CertificateDocumentSerializer, ClassifyQuerySerializer, DecideQuerySerializer,
    StoredCertificateSerializer, VerificationReportSerializer, WitnessRequestSerializer,
    error_detail,
)

logger = logging.getLogger(__name__)


class StandardResultsSetPagination(PageNumberPagination):
    page_size = 50
    page_size_query_param = 'page_size'
    max_page_size = 500


def bad_request(detail):
    return Response({'detail': detail}, status=status.HTTP_400_BAD_REQUEST)


class ClassifyViewSet(viewsets.ViewSet):
    """GET ?type= : class, rank and inhabitation of a type"""

    def list(self, request):
        query = ClassifyQuerySerializer(data=request.query_params)
        if not query.is_valid():
            return bad_request(error_detail(query.errors))
        ty = query.validated_data['type']
        return Response({
            'type': str(ty),
            'class': str(hierarchy_class(ty)),
            'rank': rank(ty),
            'inhabited': is_inhabited(ty),
            'large': is_large(ty),
        })


class DecideViewSet(viewsets.ViewSet):
    """GET ?rel=&source=&target= : the reducibility verdict"""

    def list(self, request):
        query = DecideQuerySerializer(data=request.query_params)
        if not query.is_valid():
            return bad_request(error_detail(query.errors))
        data = query.validated_data
        relation = Relation.parse(data['rel'])
        source, target = data['source'], data['target']
        return Response({
            'relation': str(relation),
            'source': str(source),
            'target': str(target),
            'source_class': str(hierarchy_class(source)),
            'target_class': str(hierarchy_class(target)),
            'reducible': decide(relation, source, target),
        })


class WitnessViewSet(viewsets.ViewSet):
    """POST rel, source, target: a certificate, optionally verified and stored"""

    def create(self, request):
        query = WitnessRequestSerializer(data=request.data)
        if not query.is_valid():
            return bad_request(error_detail(query.errors))
        data = query.validated_data
        try:
            cert = witness(Relation.parse(data['rel']), data['source'], data['target'])
        except HierarchyError as exc:
            return bad_request(str(exc))

        report = verify_certificate(cert, sample_limit=data['verify']) if data['verify'] else None
        stored = None
        if data['save']:
            stored = StoredCertificate.from_certificate(cert, report)
            stored.save()
            logger.info(f"stored certificate {stored.pk}: {stored}")

        return Response(
            {
                'certificate': CertificateDocumentSerializer(cert).data,
                'report': VerificationReportSerializer(report).data if report else None,
                'stored': stored.pk if stored else None,
            },
            status=status.HTTP_201_CREATED if stored else status.HTTP_200_OK,
        )


class StoredCertificateViewSet(viewsets.ReadOnlyModelViewSet):
    queryset = StoredCertificate.objects.all()
    serializer_class = StoredCertificateSerializer
    pagination_class = StandardResultsSetPagination
    filter_backends = [DjangoFilterBackend, filters.SearchFilter, filters.OrderingFilter]
    filterset_fields = ['relation', 'kind', 'strength', 'verified']
    search_fields = ['source', 'target']
    ordering_fields = ['created_at', 'samples_tested']
    ordering = ['-created_at']

    @action(detail=True, methods=['get'])
    def verify(self, request, pk=None):
        """Re-run verification on a stored certificate"""
        stored = self.get_object()
        try:
            cert = stored.certificate()
        except HierarchyError as exc:
            return bad_request(str(exc))
        samples = request.query_params.get('samples')
        if samples is not None and not samples.isdigit():
            return bad_request('samples: a non-negative integer is required')
        report = verify_certificate(cert, sample_limit=int(samples) if samples else None)
        return Response(VerificationReportSerializer(report).data)

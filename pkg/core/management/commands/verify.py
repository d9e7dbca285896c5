import json

from core.api.serializers import CertificateDocumentSerializer, error_detail
from core.management.base import HierarchyCommand, usage_error
from core.verify import verify_certificate


class Command(HierarchyCommand):
    help = 'Check a certificate document: typing, shape and bounded injectivity'

    def add_arguments(self, parser):
        parser.add_argument('--cert', required=True, help='path to a certificate document')
        parser.add_argument(
            '--samples', type=int, default=None,
            help='number of source inhabitants to sample (default from settings)',
        )

    def handle(self, *args, **options):
        with open(options['cert']) as fh:
            document = json.load(fh)
        if isinstance(document, dict) and 'certificate' in document:
            document = document['certificate']
        serializer = CertificateDocumentSerializer(data=document)
        if not serializer.is_valid():
            raise usage_error(error_detail(serializer.errors))
        report = verify_certificate(serializer.certificate, sample_limit=options['samples'])
        self.stdout.write(report.as_text())
        if not report.passed:
            raise SystemExit(1)

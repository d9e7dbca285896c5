import json
import logging

from core.api.serializers import CertificateDocumentSerializer, VerificationReportSerializer
from core.decide import Relation
from core.exceptions import NotReducible
from core.management.base import HierarchyCommand
from core.models import StoredCertificate
from core.pipelines import witness
from core.syntax import parse_type
from core.verify import verify_certificate

logger = logging.getLogger(__name__)


class Command(HierarchyCommand):
    help = 'Synthesize a reduction certificate for SOURCE <= TARGET'

    def add_arguments(self, parser):
        self.add_relation_argument(parser)
        parser.add_argument('source')
        parser.add_argument('target')
        parser.add_argument('--out', help='write the document to this file instead of stdout')
        parser.add_argument(
            '--verify', type=int, default=0, metavar='N',
            help='check injectivity on up to N enumerated source inhabitants',
        )
        parser.add_argument('--save', action='store_true', help='store the certificate in the database')

    def handle(self, *args, **options):
        relation = Relation.parse(options['rel'])
        source = parse_type(options['source'])
        target = parse_type(options['target'])
        try:
            cert = witness(relation, source, target)
        except NotReducible as exc:
            self.stdout.write(f"no: {exc}")
            raise SystemExit(1)

        document = CertificateDocumentSerializer(cert).data
        report = None
        if options['verify']:
            report = verify_certificate(cert, sample_limit=options['verify'])
            document = {'certificate': document, 'report': VerificationReportSerializer(report).data}

        text = json.dumps(document, indent=2)
        if options['out']:
            with open(options['out'], 'w') as fh:
                fh.write(text + '\n')
            self.stdout.write(f"wrote {cert} to {options['out']}")
        else:
            self.stdout.write(text)

        if options['save']:
            stored = StoredCertificate.from_certificate(cert, report)
            stored.save()
            self.stderr.write(self.style.SUCCESS(f"stored certificate {stored.pk}"))

        if report is not None:
            self.stderr.write(report.as_text())
            if not report.passed:
                raise SystemExit(1)

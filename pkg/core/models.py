from django.db import models

from .certificates import from_document, to_document


class StoredCertificate(models.Model):
    """A witness saved from the witness command or the API"""

    RELATION_CHOICES = [
        ('h', 'Head reduction'),
        ('be', 'Beta-eta reduction'),
        ('hp', 'Multi-head reduction'),
    ]
    KIND_CHOICES = [
        ('substitution', 'Substitution'),
        ('term', 'Reducing term'),
        ('family', 'Substitution family'),
    ]

    relation = models.CharField(max_length=2, choices=RELATION_CHOICES)
    source = models.CharField(max_length=500)
    target = models.CharField(max_length=500)
    strength = models.CharField(max_length=20)
    kind = models.CharField(max_length=20, choices=KIND_CHOICES)
    document = models.JSONField()
    verified = models.BooleanField(default=False)
    samples_tested = models.PositiveIntegerField(default=0)
    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        ordering = ['-created_at']
        indexes = [
            models.Index(fields=['relation', 'source', 'target'], name='core_cert_lookup_idx'),
        ]

    def __str__(self):
        return f"{self.source} <={self.relation} {self.target}"

    @classmethod
    def from_certificate(cls, cert, report=None):
        """Unsaved row for `cert`, marked verified when `report` passed"""
        return cls(
            relation=str(cert.relation),
            source=str(cert.source_type),
            target=str(cert.target_type),
            strength=str(cert.strength),
            kind=cert.kind,
            document=to_document(cert),
            verified=bool(report and report.passed),
            samples_tested=report.samples_tested if report else 0,
        )

    def certificate(self):
        return from_document(self.document)

    @property
    def step_count(self):
        return len(self.document.get('derivation') or ())

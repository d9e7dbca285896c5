from rest_framework import serializers

from core.certificates import ReductionCertificate, from_document, to_document
from core.exceptions import CertificateError, ParseError
from core.models import StoredCertificate
from core.syntax import parse_type, print_term


def error_detail(errors):
    """Flatten serializer errors to one `detail` line"""
    parts = []
    for field, messages in errors.items():
        if isinstance(messages, dict):
            parts.append(f"{field}: {error_detail(messages)}")
            continue
        text = '; '.join(str(m) for m in messages)
        parts.append(text if field == 'non_field_errors' else f"{field}: {text}")
    return ' | '.join(parts)


class TypeField(serializers.Field):
    """A simple type in surface syntax"""

    def to_internal_value(self, data):
        if not isinstance(data, str):
            raise serializers.ValidationError('expected a type string')
        try:
            return parse_type(data)
        except ParseError as exc:
            raise serializers.ValidationError(str(exc))

    def to_representation(self, value):
        return str(value)


class RelationField(serializers.ChoiceField):
    def __init__(self, **kwargs):
        super().__init__(choices=StoredCertificate.RELATION_CHOICES, **kwargs)


class ClassifyQuerySerializer(serializers.Serializer):
    type = TypeField()


class DecideQuerySerializer(serializers.Serializer):
    rel = RelationField()
    source = TypeField()
    target = TypeField()


class WitnessRequestSerializer(serializers.Serializer):
    rel = RelationField()
    source = TypeField()
    target = TypeField()
    verify = serializers.IntegerField(min_value=0, required=False, default=0)
    save = serializers.BooleanField(required=False, default=False)


class WitnessDocumentSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=StoredCertificate.KIND_CHOICES)
    substitutions = serializers.ListField(child=serializers.DictField(child=serializers.CharField()))
    term = serializers.CharField(allow_null=True, required=False)


class CertificateDocumentSerializer(serializers.Serializer):
    """Validates certificate documents and renders certificates back to them"""

    relation = RelationField()
    strength = serializers.ChoiceField(choices=['atomic', 'strong', 'head', 'beta-eta', 'family'])
    source = serializers.CharField()
    target = serializers.CharField()
    source_context = serializers.ListField(
        child=serializers.ListField(child=serializers.CharField(), min_length=2, max_length=2)
    )
    target_context = serializers.ListField(
        child=serializers.ListField(child=serializers.CharField(), min_length=2, max_length=2)
    )
    witness = WitnessDocumentSerializer()
    derivation = serializers.ListField(
        child=serializers.CharField(trim_whitespace=False), required=False, default=list,
    )

    def validate(self, attrs):
        document = dict(attrs, witness=dict(attrs['witness']))
        try:
            attrs['certificate'] = from_document(document)
        except CertificateError as exc:
            raise serializers.ValidationError(str(exc))
        return attrs

    def to_representation(self, instance):
        if isinstance(instance, ReductionCertificate):
            return to_document(instance)
        return super().to_representation(instance)

    @property
    def certificate(self):
        return self.validated_data['certificate']


class VerificationReportSerializer(serializers.Serializer):
    subject = serializers.CharField()
    outcome = serializers.SerializerMethodField()
    passed = serializers.BooleanField(read_only=True)
    samples_tested = serializers.IntegerField()
    collision = serializers.SerializerMethodField()
    detail = serializers.CharField()
    notes = serializers.ListField(child=serializers.CharField())

    def get_outcome(self, report):
        return str(report.outcome)

    def get_collision(self, report):
        if not report.collision:
            return None
        return [print_term(term) for term in report.collision]


class StoredCertificateSerializer(serializers.ModelSerializer):
    step_count = serializers.ReadOnlyField()

    class Meta:
        model = StoredCertificate
        fields = '__all__'

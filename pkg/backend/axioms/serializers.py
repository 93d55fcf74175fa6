from rest_framework import serializers

from measures.serializers import to_plain


class AxiomReportSerializer(serializers.Serializer):
    axiom = serializers.CharField()
    measure = serializers.CharField()
    verdict = serializers.CharField()
    reason = serializers.CharField(allow_blank=True)
    witness = serializers.SerializerMethodField()
    evidence = serializers.SerializerMethodField()

    def get_witness(self, obj):
        return to_plain(obj.witness)

    def get_evidence(self, obj):
        return to_plain(obj.evidence)


class MatrixRowSerializer(serializers.Serializer):
    """One measure row of the axiom matrix"""

    measure = serializers.CharField()
    A1 = serializers.CharField()
    A2 = serializers.CharField()
    A3 = serializers.CharField()
    A4 = serializers.CharField()
    A5 = serializers.CharField()

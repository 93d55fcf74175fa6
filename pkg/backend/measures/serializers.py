import math
from fractions import Fraction

import numpy as np
from rest_framework import serializers
from rest_framework.renderers import JSONRenderer


def to_plain(value):
    """Recursively convert Fractions, sets and tuples into JSON-ready values"""
    if isinstance(value, Fraction):
        return {'exact': str(value), 'value': round(float(value), 4)}
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, (set, frozenset)):
        return sorted((to_plain(v) for v in value), key=str)
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    return value


class PrecisionReportSerializer(serializers.Serializer):
    measure = serializers.CharField()
    value = serializers.SerializerMethodField()
    exact = serializers.SerializerMethodField()
    status = serializers.CharField()
    reason = serializers.CharField(allow_blank=True)
    options = serializers.SerializerMethodField()
    diagnostics = serializers.SerializerMethodField()

    def get_value(self, obj):
        return round(float(obj.value), 4) if obj.value is not None else None

    def get_exact(self, obj):
        return str(obj.value) if obj.value is not None else None

    def get_options(self, obj):
        return to_plain(obj.options)

    def get_diagnostics(self, obj):
        return to_plain(obj.diagnostics)


def render_record(data) -> str:
    """One JSON document per evaluation"""
    return JSONRenderer().render(data).decode('utf-8')

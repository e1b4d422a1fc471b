"""
SERIALIZERS de Django REST Framework para el documento de configuración.

Validan la FORMA del JSON (tipos, rangos, claves conocidas) antes de
construir los Value Objects. Modo estricto: una clave desconocida en
cualquier sección es un error, nunca se ignora en silencio.

NO contienen física: eso vive en el dominio (ModelParams, FitBasis...).
"""
from collections.abc import Mapping

from rest_framework import serializers

from src.domain.measurement.value_objects import UINT64_MAX


# ─────────────────────────────────────────────────────────────
# BASE
# ─────────────────────────────────────────────────────────────
class StrictSerializer(serializers.Serializer):
    """Serializer que rechaza claves que no declara."""

    def to_internal_value(self, data):
        if isinstance(data, Mapping):
            unknown = sorted(set(data) - set(self.fields))
            if unknown:
                raise serializers.ValidationError({key: ["Campo desconocido."] for key in unknown})
        return super().to_internal_value(data)


def complex_pair(**kwargs) -> serializers.ListField:
    """Número complejo como lista [re, im]."""
    return serializers.ListField(
        child=serializers.FloatField(),
        min_length=2,
        max_length=2,
        error_messages={"min_length": "Se espera [re, im].", "max_length": "Se espera [re, im]."},
        **kwargs,
    )


# ─────────────────────────────────────────────────────────────
# SECCIONES
# ─────────────────────────────────────────────────────────────
class ModelSectionSerializer(StrictSerializer):
    sideband_order = serializers.IntegerField(min_value=0)
    lamb_dicke = serializers.FloatField(min_value=0.0)
    detuning = serializers.FloatField()
    base_coupling = serializers.FloatField()
    laser_phase = serializers.FloatField()
    trap_position_phase = serializers.FloatField()
    trap_frequency = serializers.FloatField()
    fock_cutoff = serializers.IntegerField(min_value=0, allow_null=True)
    sideband_orders = serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=1)


class ElectronicSerializer(StrictSerializer):
    preset = serializers.ChoiceField(choices=["ground", "excited", "phase_superposition", "custom"])
    gamma1 = complex_pair(allow_null=True)
    gamma2 = complex_pair(allow_null=True)

    def validate(self, attrs):
        if attrs["preset"] == "custom" and (attrs.get("gamma1") is None or attrs.get("gamma2") is None):
            raise serializers.ValidationError({"gamma1": ["gamma1 y gamma2 son obligatorios con preset=custom."]})
        return attrs


class MotionalSerializer(StrictSerializer):
    kind = serializers.ChoiceField(choices=["fock", "coherent", "distribution"])
    n = serializers.IntegerField(min_value=0, allow_null=True)
    alpha0 = complex_pair(allow_null=True)
    probabilities = serializers.ListField(
        child=serializers.FloatField(min_value=0.0), allow_null=True, allow_empty=False
    )


class InputStateSerializer(StrictSerializer):
    electronic = ElectronicSerializer()
    motional = MotionalSerializer()
    fock_states = serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=1)


class TimeGridSerializer(StrictSerializer):
    start = serializers.FloatField(min_value=0.0)
    stop = serializers.FloatField(min_value=0.0, allow_null=True)
    points = serializers.IntegerField(min_value=1)


class SamplingSerializer(StrictSerializer):
    g_min = serializers.FloatField(min_value=0.0, allow_null=True)
    g_max = serializers.FloatField()
    g_points = serializers.IntegerField(min_value=1)
    g_max_per_sideband = serializers.DictField(child=serializers.FloatField())
    times = serializers.ListField(child=serializers.FloatField(min_value=0.0), allow_null=True)
    time_grid = TimeGridSerializer(allow_null=True)
    shots = serializers.IntegerField(min_value=1)
    replicates = serializers.IntegerField(min_value=1)
    master_seed = serializers.IntegerField(min_value=0, max_value=UINT64_MAX)

    def validate_g_max(self, value):
        if not value > 0:
            raise serializers.ValidationError("Debe ser mayor que 0.")
        return value

    def validate_g_max_per_sideband(self, value):
        for key, g_max in value.items():
            if not str(key).isdigit():
                raise serializers.ValidationError(f"La clave '{key}' no es un orden de banda lateral.")
            if not g_max > 0:
                raise serializers.ValidationError(f"g_max de la banda {key} debe ser mayor que 0.")
        return value

    def validate(self, attrs):
        if not attrs.get("times") and not attrs.get("time_grid"):
            raise serializers.ValidationError({"times": ["Se requiere 'times' o 'time_grid'."]})
        g_min = attrs.get("g_min")
        if g_min is not None and g_min > attrs["g_max"]:
            raise serializers.ValidationError({"g_min": ["Debe ser ≤ g_max."]})
        return attrs


class FitSerializer(StrictSerializer):
    parity = serializers.ChoiceField(choices=["odd", "even"])
    max_power = serializers.IntegerField(min_value=1)
    offset = serializers.FloatField()
    records_path = serializers.CharField(allow_null=True, allow_blank=False)
    curve_points = serializers.IntegerField(min_value=2)


class OutputSerializer(StrictSerializer):
    mode = serializers.ChoiceField(choices=["simulate", "sample", "fit", "analyze"])
    prefix = serializers.CharField(allow_blank=True)


class ExperimentDocumentSerializer(StrictSerializer):
    """Documento completo (preset + usuario) de una corrida."""
    model = ModelSectionSerializer()
    input_state = InputStateSerializer()
    sampling = SamplingSerializer()
    fit = FitSerializer()
    output = OutputSerializer()


# ─────────────────────────────────────────────────────────────
# ERRORES
# ─────────────────────────────────────────────────────────────
def flatten_errors(errors, path: str = "") -> list[str]:
    """{'sampling': {'shots': ['...']}} → ['sampling.shots: ...']."""
    if isinstance(errors, Mapping):
        lines = []
        for key, value in errors.items():
            if key == "non_field_errors":
                child = path
            else:
                child = f"{path}.{key}" if path else str(key)
            lines += flatten_errors(value, child)
        return lines
    if isinstance(errors, list):
        lines = []
        for item in errors:
            lines += flatten_errors(item, path)
        return lines
    return [f"{path or 'documento'}: {errors}"]

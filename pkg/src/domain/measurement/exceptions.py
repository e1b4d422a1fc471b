"""
EXCEPCIONES del dominio de medición y estimación.

Jerarquía:
    DomainError
        └── MeasurementError
            ├── InvalidRecordError
            ├── ArtifactNotFound      (también FileNotFoundError: E/S)
            ├── WrongBasis
            ├── SingularDesign        (numérica)
            └── DegenerateWeights     (numérica)
"""
from src.domain.shared.base import DomainError, NumericalFailure


class MeasurementError(DomainError):
    """Base de todas las excepciones de medición."""
    pass


class InvalidRecordError(MeasurementError):
    """Registro, semilla o base de ajuste fuera de su rango permitido."""
    pass


class ArtifactNotFound(MeasurementError, FileNotFoundError):
    """El repositorio no tiene el artefacto pedido, sea en disco o en memoria."""
    def __init__(self, location: str):
        super().__init__(f"No existe el artefacto '{location}'.")
        self.location = location


class WrongBasis(MeasurementError):
    """El ajuste no se hizo con la base/offset que la extracción necesita."""
    def __init__(self, required: str, actual: str, offset: float):
        super().__init__(
            f"La extracción requiere base {required}; el ajuste usó base {actual} con offset {offset:g}."
        )
        self.required = required
        self.actual = actual


class SingularDesign(MeasurementError, NumericalFailure):
    """La matriz de diseño no permite resolver los coeficientes."""
    def __init__(self, reason: str, condition_number: float = float("inf")):
        super().__init__(f"Diseño singular: {reason} (número de condición {condition_number:.3e}).")
        self.condition_number = condition_number


class DegenerateWeights(MeasurementError, NumericalFailure):
    """Todos los p̂ valen 0 o 1: no hay información de varianza."""
    def __init__(self, record_count: int):
        super().__init__(
            f"Los {record_count} registros tienen p̂ ∈ {{0, 1}}; los pesos son degenerados."
        )
        self.record_count = record_count

"""
Clases base compartidas por todo el dominio.
Ningún import de Django aquí; el dominio es Python + numpy/scipy.
"""
from dataclasses import dataclass, field
from datetime import datetime, timezone
from uuid import UUID, uuid4


# ─────────────────────────────────────────────────────────────
# BASE DOMAIN EVENT
# ─────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class DomainEvent:
    """
    Algo importante que OCURRIÓ durante una corrida (pasado).
    Inmutable: los hechos del pasado no cambian.
    """
    event_id: UUID = field(default_factory=uuid4)
    occurred_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc))


# ─────────────────────────────────────────────────────────────
# BASE DOMAIN EXCEPTION
# ─────────────────────────────────────────────────────────────
class DomainError(Exception):
    """Violación de una regla del modelo físico o de la estimación."""
    pass


class NumericalFailure(DomainError):
    """
    Un cálculo numérico no pudo completarse con la precisión pedida.
    La CLI las traduce al código de salida 3.
    """
    pass

"""
DOMAIN EVENTS de la medición.

Convención de nombres: Sustantivo + Participio pasado
  ✅ RecordsSampled, PolynomialFitted
  ❌ SampleRecords, FitPolynomial  ← esos son Commands, no Events
"""
from dataclasses import dataclass, field

from src.domain.shared.base import DomainEvent


@dataclass(frozen=True)
class RecordsSampled(DomainEvent):
    """Se generaron registros con ruido de disparo para un tiempo."""
    t: float = field(default=0.0)
    record_count: int = field(default=0)
    shots_per_point: int = field(default=0)
    replicates: int = field(default=1)


@dataclass(frozen=True)
class PolynomialFitted(DomainEvent):
    parity: str = field(default="")
    max_power: int = field(default=0)
    t: float = field(default=0.0)
    condition_number: float = field(default=0.0)
    residual_rms: float = field(default=0.0)


@dataclass(frozen=True)
class ArtifactStored(DomainEvent):
    """Un archivo CSV/JSON quedó escrito en el repositorio de artefactos."""
    name: str = field(default="")
    location: str = field(default="")


@dataclass(frozen=True)
class FigureCompleted(DomainEvent):
    """Un comando de figura terminó y escribió todos sus artefactos."""
    command: str = field(default="")
    artifacts: tuple[str, ...] = field(default=())

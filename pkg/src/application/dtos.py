"""
DTOs (Data Transfer Objects) de la capa Application.

Objetos simples que transportan resultados entre capas.
NO tienen lógica de negocio. Son la "moneda de cambio" entre
los handlers y la capa de interfaces (comandos de gestión).
"""
from dataclasses import dataclass, field


# ─────────────────────────────────────────────────────────────
# PIPELINE DTOs
# ─────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class FigureReportDTO:
    """Resultado de un comando de figura o de `run`."""
    command: str
    artifacts: tuple[str, ...]
    summary: dict = field(default_factory=dict)


@dataclass(frozen=True)
class EstimateRowDTO:
    """Una estimación frente a su valor analítico."""
    label: str
    t: float
    estimate: float
    stderr: float
    analytic: float
    status: str = "ok"

    @property
    def z_score(self) -> float:
        if not self.stderr > 0:
            return float("nan")
        return (self.estimate - self.analytic) / self.stderr

    @property
    def covered(self) -> bool:
        return abs(self.estimate - self.analytic) <= 3.0 * self.stderr


@dataclass(frozen=True)
class IdentityCheckDTO:
    """Ambos lados de la identidad ħΔω[σ₂₂(t) − σ₂₂(0)] = ⟨Ĥ⟩(t) − ⟨Ĥ⟩(0)."""
    t: float
    sigma22: float
    lhs: float
    rhs: float

    @property
    def abs_difference(self) -> float:
        return abs(self.lhs - self.rhs)


@dataclass(frozen=True)
class TimeFitDTO:
    """Ajuste de los registros de un tiempo; `estimate` es None si la base no corresponde a ningún protocolo."""
    t: float
    record_count: int
    fit: object
    estimate: object | None = None

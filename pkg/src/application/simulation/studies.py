"""
Estudio polinomial en un tiempo: σ₂₂ exacto sobre la malla de g, réplicas
con ruido de disparo, ajuste de paridad y extracción del término físico.

Lo comparten los cuatro comandos de figura y el modo `fit` de `run`.
"""
import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from src.domain.measurement.estimation import (
    COMMUTATOR_OFFSET,
    HAMILTONIAN_OFFSET,
    extract_commutator,
    extract_hamiltonian,
    fit_parity_polynomial,
)
from src.domain.measurement.exceptions import DegenerateWeights
from src.domain.measurement.sampling import sample_replicates
from src.domain.measurement.value_objects import (
    Estimate,
    FitBasis,
    FitResult,
    MeasurementRecord,
    Parity,
    SeedSpec,
)
from src.domain.shared.task_runner import TaskRunner
from src.domain.vibronic.analytics import commutator_expectation, commutator_expectation_weighted
from src.domain.vibronic.propagator import sigma22_series
from src.domain.vibronic.states import number_statistics
from src.domain.vibronic.value_objects import Coherent, ElectronicAmplitudes, ModelParams, MotionalSpec

logger = logging.getLogger(__name__)

Extractor = Callable[[FitResult, ModelParams], Estimate]

STATUS_OK = "ok"
STATUS_DEGENERATE = "degenerate"


@dataclass(frozen=True)
class ReplicateOutcome:
    records: list[MeasurementRecord]
    fit: FitResult | None
    estimate: Estimate
    status: str


@dataclass(frozen=True)
class StudyResult:
    t: float
    g_grid: tuple[float, ...]
    probabilities: tuple[float, ...]
    outcomes: list[ReplicateOutcome]

    @property
    def first(self) -> ReplicateOutcome:
        return self.outcomes[0]


def extractor_for(basis: FitBasis, offset: float) -> Extractor | None:
    """Extracción que corresponde a la base y el offset; None si no hay ninguna."""
    if basis.parity is Parity.ODD and math.isclose(offset, HAMILTONIAN_OFFSET):
        return extract_hamiltonian
    if basis.parity is Parity.EVEN and math.isclose(offset, COMMUTATOR_OFFSET, abs_tol=1e-12):
        return extract_commutator
    return None


def commutator_reference(params: ModelParams, electronic: ElectronicAmplitudes, motional: MotionalSpec, t: float) -> float:
    """Valor cerrado del conmutador para entrada |1⟩; NaN para otras entradas electrónicas."""
    if electronic.excited_population != 0.0:
        return math.nan
    if isinstance(motional, Coherent):
        return commutator_expectation(params, motional.alpha0, t)
    return commutator_expectation_weighted(params, number_statistics(motional, params.fock_cutoff), t)


def fit_replicate(
    records: list[MeasurementRecord],
    params: ModelParams,
    basis: FitBasis,
    offset: float,
    extractor: Extractor,
    tolerate_degenerate: bool = False,
) -> ReplicateOutcome:
    try:
        fit = fit_parity_polynomial(records, basis, offset)
    except DegenerateWeights:
        if not tolerate_degenerate:
            raise
        return ReplicateOutcome(records, None, Estimate(0.0, math.nan), STATUS_DEGENERATE)
    return ReplicateOutcome(records, fit, extractor(fit, params), STATUS_OK)


def polynomial_study(
    params: ModelParams,
    electronic: ElectronicAmplitudes,
    motional: MotionalSpec,
    t: float,
    g_grid: Sequence[float],
    *,
    shots: int,
    replicates: int,
    seed: SeedSpec,
    basis: FitBasis,
    offset: float,
    extractor: Extractor,
    point_offset: int = 0,
    runner: TaskRunner | None = None,
    tolerate_degenerate: bool = False,
) -> StudyResult:
    grid = tuple(float(g) for g in g_grid)
    probabilities = tuple(float(p) for p in sigma22_series(params, electronic, motional, t, grid))

    samples = sample_replicates(grid, t, probabilities, shots, seed, replicates, runner, point_offset=point_offset)

    def one(records: list[MeasurementRecord]) -> ReplicateOutcome:
        return fit_replicate(records, params, basis, offset, extractor, tolerate_degenerate)

    outcomes = runner.map(one, samples) if runner is not None else [one(records) for records in samples]
    logger.debug(f"[Study] t={t:.6g}: {replicates} réplicas, estado {outcomes[0].status}")
    return StudyResult(t=t, g_grid=grid, probabilities=probabilities, outcomes=outcomes)


def coverage_fraction(estimates: Sequence[Estimate], reference: float, sigmas: float = 3.0) -> float:
    usable = [e for e in estimates if e.stderr > 0]
    if not usable or not math.isfinite(reference):
        return math.nan
    return sum(e.covers(reference, sigmas) for e in usable) / len(usable)

"""
COMMAND: ReproduceFigure4
Barrido temporal del conmutador parcialmente integrado para cada banda
lateral de `sideband_orders`, con la certificación de valor no nulo en
el tiempo de la malla más cercano a Δωt = π.
"""
import logging
import math
from dataclasses import dataclass, replace

from src.application.dtos import EstimateRowDTO, FigureReportDTO
from src.application.simulation.artifacts import ArtifactWriter
from src.application.simulation.config import ExperimentConfig
from src.application.simulation.studies import (
    STATUS_OK,
    StudyResult,
    commutator_reference,
    polynomial_study,
)
from src.domain.measurement.estimation import extract_commutator
from src.domain.measurement.events import RecordsSampled
from src.domain.measurement.repositories import ArtifactRepository
from src.domain.measurement.value_objects import Estimate
from src.domain.shared.event_bus import EventBus
from src.domain.shared.task_runner import TaskRunner

logger = logging.getLogger(__name__)

CERTIFICATION_SIGMAS = 5.0
COVERAGE_SIGMAS = 3.0


@dataclass(frozen=True)
class ReproduceFigure4Command:
    config: ExperimentConfig


class ReproduceFigure4CommandHandler:
    """
    Para cada k y cada t de la malla temporal: registros con ruido,
    ajuste par, estimación y valor cerrado. Los tiempos con registros
    todos 0 o todos 1 se reportan con estado `degenerate`.
    """

    def __init__(self, repo: ArtifactRepository, event_bus: EventBus, runner: TaskRunner):
        self._repo = repo
        self._event_bus = event_bus
        self._runner = runner

    def handle(self, command: ReproduceFigure4Command) -> FigureReportDTO:
        config = command.config
        writer = ArtifactWriter(self._repo, self._event_bus, config)
        commutator_rows, replicate_rows = [], []
        certification = {}

        for k_index, k in enumerate(config.sideband_orders):
            params = replace(config.params, sideband_order=k)
            grid = config.grid_for_sideband(k)

            def study_at(item: tuple[int, float], params=params, grid=grid, k_index=k_index) -> StudyResult:
                t_index, t = item
                return polynomial_study(
                    params, config.electronic, config.motional, t, grid,
                    shots=config.shots, replicates=config.replicates, seed=config.seed,
                    basis=config.basis, offset=config.offset, extractor=extract_commutator,
                    point_offset=(k_index * len(config.times) + t_index) * len(grid),
                    tolerate_degenerate=True,
                )

            studies = self._runner.map(study_at, list(enumerate(config.times)))
            self._event_bus.publish(RecordsSampled(
                t=config.times[-1],
                record_count=len(grid) * len(config.times),
                shots_per_point=config.shots,
                replicates=config.replicates,
            ))

            cells = []
            for study in studies:
                analytic = commutator_reference(params, config.electronic, config.motional, study.t)
                first = study.first
                row = EstimateRowDTO(
                    label=str(k), t=study.t, estimate=first.estimate.value, stderr=first.estimate.stderr,
                    analytic=analytic, status=first.status,
                )
                commutator_rows.append(
                    (k, row.t, params.detuning * row.t, row.estimate, row.stderr, row.analytic, row.z_score, row.status)
                )
                for r, outcome in enumerate(study.outcomes):
                    replicate_rows.append(
                        (k, r, study.t, outcome.estimate.value, outcome.estimate.stderr, analytic, outcome.status)
                    )
                    if outcome.status == STATUS_OK:
                        cells.append(outcome.estimate.covers(analytic, COVERAGE_SIGMAS))

            certification[str(k)] = self._certify(params.detuning, studies, cells)
            logger.info(f"[Figure4] k={k}: {len(studies)} tiempos, certificación {certification[str(k)]}")

        writer.table(
            "commutator.csv",
            ("sideband_order", "t", "detuning_t", "estimate", "stderr", "analytic", "z_score", "status"),
            commutator_rows,
        )
        writer.table(
            "estimates.csv",
            ("sideband_order", "replicate", "t", "estimate", "stderr", "analytic", "status"),
            replicate_rows,
        )
        writer.json("certification.json", {"sigmas": CERTIFICATION_SIGMAS, "sidebands": certification})
        artifacts = writer.finish()
        return FigureReportDTO(command=config.command, artifacts=artifacts, summary={"certification": certification})

    @staticmethod
    def _certify(detuning: float, studies: list[StudyResult], cells: list[bool]) -> dict:
        """Estimación en el tiempo más cercano a Δωt = π, su z frente a 0 y la cobertura 3σ."""
        nearest = min(studies, key=lambda s: abs(abs(detuning) * s.t - math.pi))
        estimates: list[Estimate] = [o.estimate for o in nearest.outcomes if o.status == STATUS_OK]
        z_scores = [e.z_score() for e in estimates]
        first_z = z_scores[0] if z_scores else math.nan
        return {
            "t": nearest.t,
            "detuning_t": detuning * nearest.t,
            "estimate": nearest.first.estimate.value,
            "stderr": nearest.first.estimate.stderr,
            "z_score": first_z,
            "certified": bool(first_z > CERTIFICATION_SIGMAS),
            "certified_fraction": (
                sum(z > CERTIFICATION_SIGMAS for z in z_scores) / len(z_scores) if z_scores else math.nan
            ),
            "coverage_3sigma": sum(cells) / len(cells) if cells else math.nan,
        }

"""
COMMAND: ReproduceFigure1
Protocolo Hamiltoniano en la banda cero: superposición de fase π/2,
datos generados sobre la malla de g, ajuste impar con offset 1/2 y
extracción de ⟨Ĥ(t)⟩ = ħΔω·c₁.
"""
import logging
from dataclasses import dataclass

import numpy as np

from src.application.dtos import EstimateRowDTO, FigureReportDTO
from src.application.simulation.artifacts import ArtifactWriter
from src.application.simulation.config import ExperimentConfig
from src.application.simulation.studies import coverage_fraction, polynomial_study
from src.domain.measurement.estimation import extract_hamiltonian
from src.domain.measurement.events import PolynomialFitted, RecordsSampled
from src.domain.measurement.repositories import ArtifactRepository
from src.domain.shared.event_bus import EventBus
from src.domain.shared.task_runner import TaskRunner
from src.domain.vibronic.analytics import h_expectation_general
from src.domain.vibronic.propagator import sigma22_series
from src.domain.vibronic.states import number_statistics

logger = logging.getLogger(__name__)

ESTIMATE_COLUMNS = ("replicate", "t", "estimate", "stderr", "analytic", "z_score", "covered")


@dataclass(frozen=True)
class ReproduceFigure1Command:
    config: ExperimentConfig


class ReproduceFigure1CommandHandler:
    """
    Orquesta la figura del término lineal:
      1. σ₂₂ exacto sobre la malla de g
      2. Réplicas con ruido de disparo y ajuste impar por réplica
      3. Valor analítico ⟨Ĥ(t)⟩ para comparar
      4. Escribe registros, curvas, estimaciones y manifiesto
    """

    def __init__(self, repo: ArtifactRepository, event_bus: EventBus, runner: TaskRunner):
        self._repo = repo
        self._event_bus = event_bus
        self._runner = runner

    def handle(self, command: ReproduceFigure1Command) -> FigureReportDTO:
        config = command.config
        params = config.params
        t = config.times[0]

        analytic = h_expectation_general(
            params, config.electronic, number_statistics(config.motional, params.fock_cutoff), t
        )
        study = polynomial_study(
            params, config.electronic, config.motional, t, config.g_grid,
            shots=config.shots, replicates=config.replicates, seed=config.seed,
            basis=config.basis, offset=config.offset, extractor=extract_hamiltonian,
            runner=self._runner,
        )
        self._event_bus.publish(RecordsSampled(
            t=t, record_count=len(config.g_grid), shots_per_point=config.shots, replicates=config.replicates,
        ))
        fit = study.first.fit
        self._event_bus.publish(PolynomialFitted(
            parity=fit.basis.parity.value, max_power=fit.basis.max_power, t=t,
            condition_number=fit.condition_number, residual_rms=fit.residual_rms,
        ))

        rows = [
            EstimateRowDTO(label=str(r), t=t, estimate=o.estimate.value, stderr=o.estimate.stderr, analytic=analytic)
            for r, o in enumerate(study.outcomes)
        ]
        coverage = coverage_fraction([o.estimate for o in study.outcomes], analytic)

        writer = ArtifactWriter(self._repo, self._event_bus, config)
        writer.records("records.csv", study.first.records)
        curve_g = np.linspace(0.0, max(config.g_grid), config.curve_points)
        exact_curve = sigma22_series(params, config.electronic, config.motional, t, curve_g)
        writer.table(
            "fit_curve.csv",
            ("g", "sigma22_fit", "sigma22_exact"),
            list(zip(curve_g, fit.evaluate(curve_g), exact_curve)),
        )
        c1 = fit.coefficient(1)
        writer.table(
            "linear_term.csv",
            ("g", "c1_g", "offset_plus_c1_g"),
            [(g, c1 * g, fit.offset + c1 * g) for g in curve_g],
        )
        writer.table(
            "estimates.csv",
            ESTIMATE_COLUMNS,
            [(row.label, row.t, row.estimate, row.stderr, row.analytic, row.z_score, row.covered) for row in rows],
        )
        summary = {
            "t": t,
            "hamiltonian_estimate": rows[0].estimate,
            "hamiltonian_stderr": rows[0].stderr,
            "hamiltonian_analytic": analytic,
            "coverage_3sigma": coverage,
        }
        writer.json("fit.json", {**summary, "fit": fit.to_dict()})
        artifacts = writer.finish()

        logger.info(
            f"[Figure1] ⟨Ĥ⟩ estimado {rows[0].estimate:.6g} ± {rows[0].stderr:.2g} "
            f"(analítico {analytic:.6g}) en t={t:g}"
        )
        return FigureReportDTO(command=config.command, artifacts=artifacts, summary=summary)

"""
COMMAND: ReproduceFigure3
Protocolo del conmutador: entrada |1⟩ ⊗ |α0⟩ en la banda k, ajuste par
sin offset y extracción de i∫⟨[Ĥ(τ), Ĥ(t)]⟩dτ = ħΔω·c₂.
"""
import logging
from dataclasses import dataclass

import numpy as np

from src.application.dtos import EstimateRowDTO, FigureReportDTO
from src.application.simulation.artifacts import ArtifactWriter
from src.application.simulation.config import ExperimentConfig
from src.application.simulation.studies import commutator_reference, coverage_fraction, polynomial_study
from src.domain.measurement.estimation import extract_commutator
from src.domain.measurement.events import PolynomialFitted, RecordsSampled
from src.domain.measurement.repositories import ArtifactRepository
from src.domain.shared.event_bus import EventBus
from src.domain.shared.task_runner import TaskRunner
from src.domain.vibronic.propagator import sigma22_series

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReproduceFigure3Command:
    config: ExperimentConfig


class ReproduceFigure3CommandHandler:

    def __init__(self, repo: ArtifactRepository, event_bus: EventBus, runner: TaskRunner):
        self._repo = repo
        self._event_bus = event_bus
        self._runner = runner

    def handle(self, command: ReproduceFigure3Command) -> FigureReportDTO:
        config = command.config
        params = config.params
        t = config.times[0]

        analytic = commutator_reference(params, config.electronic, config.motional, t)
        study = polynomial_study(
            params, config.electronic, config.motional, t, config.g_grid,
            shots=config.shots, replicates=config.replicates, seed=config.seed,
            basis=config.basis, offset=config.offset, extractor=extract_commutator,
            runner=self._runner,
        )
        fit = study.first.fit
        self._event_bus.publish(RecordsSampled(
            t=t, record_count=len(config.g_grid), shots_per_point=config.shots, replicates=config.replicates,
        ))
        self._event_bus.publish(PolynomialFitted(
            parity=fit.basis.parity.value, max_power=fit.basis.max_power, t=t,
            condition_number=fit.condition_number, residual_rms=fit.residual_rms,
        ))

        rows = [
            EstimateRowDTO(label=str(r), t=t, estimate=o.estimate.value, stderr=o.estimate.stderr, analytic=analytic)
            for r, o in enumerate(study.outcomes)
        ]

        writer = ArtifactWriter(self._repo, self._event_bus, config)
        writer.records("records.csv", study.first.records)
        curve_g = np.linspace(0.0, max(config.g_grid), config.curve_points)
        writer.table(
            "fit_curve.csv",
            ("g", "sigma22_fit", "sigma22_exact"),
            list(zip(curve_g, fit.evaluate(curve_g), sigma22_series(params, config.electronic, config.motional, t, curve_g))),
        )
        c2 = fit.coefficient(2)
        writer.table("quadratic_term.csv", ("g", "c2_g2"), [(g, c2 * g * g) for g in curve_g])
        writer.table(
            "estimates.csv",
            ("replicate", "t", "estimate", "stderr", "analytic", "z_score", "covered"),
            [(row.label, row.t, row.estimate, row.stderr, row.analytic, row.z_score, row.covered) for row in rows],
        )
        summary = {
            "t": t,
            "sideband_order": params.sideband_order,
            "commutator_estimate": rows[0].estimate,
            "commutator_stderr": rows[0].stderr,
            "commutator_analytic": analytic,
            "coverage_3sigma": coverage_fraction([o.estimate for o in study.outcomes], analytic),
        }
        writer.json("fit.json", {**summary, "fit": fit.to_dict()})
        artifacts = writer.finish()

        logger.info(
            f"[Figure3] conmutador k={params.sideband_order}: {rows[0].estimate:.6g} ± {rows[0].stderr:.2g} "
            f"(analítico {analytic:.6g}) en t={t:g}"
        )
        return FigureReportDTO(command=config.command, artifacts=artifacts, summary=summary)

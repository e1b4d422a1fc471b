"""
COMMAND: ReproduceFigure2
⟨Ĥ(t)⟩ extraído para cada estado de Fock |n⟩ de la lista `fock_states`,
junto al valor analítico |κ| f_0(n;η)(γ1γ2* e^{−iΔωt} + c.c.).
"""
import logging
from dataclasses import dataclass

from src.application.dtos import EstimateRowDTO, FigureReportDTO
from src.application.simulation.artifacts import ArtifactWriter
from src.application.simulation.config import ExperimentConfig
from src.application.simulation.studies import StudyResult, coverage_fraction, polynomial_study
from src.domain.measurement.estimation import extract_hamiltonian
from src.domain.measurement.events import PolynomialFitted, RecordsSampled
from src.domain.measurement.repositories import ArtifactRepository
from src.domain.shared.event_bus import EventBus
from src.domain.shared.task_runner import TaskRunner
from src.domain.vibronic.analytics import h_expectation_fock
from src.domain.vibronic.value_objects import Fock

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReproduceFigure2Command:
    config: ExperimentConfig


class ReproduceFigure2CommandHandler:
    """
    Un estudio polinomial por cada n. Los sub-flujos de cada n no se
    solapan: el punto i de la malla del n-ésimo estado usa el índice
    n_index·len(malla) + i.
    """

    def __init__(self, repo: ArtifactRepository, event_bus: EventBus, runner: TaskRunner):
        self._repo = repo
        self._event_bus = event_bus
        self._runner = runner

    def _study(self, config: ExperimentConfig, index: int, n: int) -> StudyResult:
        return polynomial_study(
            config.params, config.electronic, Fock(n), config.times[0], config.g_grid,
            shots=config.shots, replicates=config.replicates, seed=config.seed,
            basis=config.basis, offset=config.offset, extractor=extract_hamiltonian,
            point_offset=index * len(config.g_grid),
        )

    def handle(self, command: ReproduceFigure2Command) -> FigureReportDTO:
        config = command.config
        t = config.times[0]
        studies = self._runner.map(
            lambda item: self._study(config, *item), list(enumerate(config.fock_states))
        )

        writer = ArtifactWriter(self._repo, self._event_bus, config)
        summary_rows, replicate_rows, fits = [], [], {}
        for n, study in zip(config.fock_states, studies):
            analytic = h_expectation_fock(config.params, config.electronic, n, t)
            rows = [
                EstimateRowDTO(label=str(n), t=t, estimate=o.estimate.value, stderr=o.estimate.stderr, analytic=analytic)
                for o in study.outcomes
            ]
            coverage = coverage_fraction([o.estimate for o in study.outcomes], analytic)
            first = rows[0]
            summary_rows.append(
                (n, t, first.estimate, first.stderr, analytic, first.z_score, first.covered, coverage)
            )
            replicate_rows += [
                (n, r, row.estimate, row.stderr, row.analytic, row.z_score, row.covered)
                for r, row in enumerate(rows)
            ]
            fit = study.first.fit
            fits[str(n)] = fit.to_dict()
            self._event_bus.publish(RecordsSampled(
                t=t, record_count=len(config.g_grid), shots_per_point=config.shots, replicates=config.replicates,
            ))
            self._event_bus.publish(PolynomialFitted(
                parity=fit.basis.parity.value, max_power=fit.basis.max_power, t=t,
                condition_number=fit.condition_number, residual_rms=fit.residual_rms,
            ))
            writer.records(f"records_n{n}.csv", study.first.records)
            logger.info(f"[Figure2] n={n}: ⟨Ĥ⟩ {first.estimate:.6g} ± {first.stderr:.2g} (analítico {analytic:.6g})")

        writer.table(
            "hamiltonian.csv",
            ("n", "t", "estimate", "stderr", "analytic", "z_score", "covered", "coverage_fraction"),
            summary_rows,
        )
        writer.table(
            "estimates.csv",
            ("n", "replicate", "estimate", "stderr", "analytic", "z_score", "covered"),
            replicate_rows,
        )
        writer.json("fits.json", {"t": t, "fits": fits})
        artifacts = writer.finish()

        covered = [row[6] for row in replicate_rows]
        summary = {
            "t": t,
            "fock_states": list(config.fock_states),
            "cells": len(covered),
            "coverage_3sigma": sum(covered) / len(covered),
        }
        return FigureReportDTO(command=config.command, artifacts=artifacts, summary=summary)

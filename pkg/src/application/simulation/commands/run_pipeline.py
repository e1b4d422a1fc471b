"""
COMMAND: RunPipeline
Composición libre de las etapas según `output.mode`:

    simulate → σ₂₂ exacto sobre tiempos × g           ({prefix}sigma22.csv)
    sample   → registros con ruido, uno por réplica     ({prefix}records_r{r}.csv)
    fit      → ajuste por tiempo de registros dados     ({prefix}fits.json, fit_summary.csv)
    analyze  → identidad de energía y conmutador a g=1  ({prefix}analyze.csv)
"""
import logging
import math
from dataclasses import dataclass

from src.application.dtos import FigureReportDTO
from src.application.simulation.artifacts import ArtifactWriter
from src.application.simulation.commands.fit_records import FitRecordsCommand, FitRecordsCommandHandler
from src.application.simulation.commands.sample_records import (
    SampleRecordsCommand,
    SampleRecordsCommandHandler,
)
from src.application.simulation.config import ConfigurationError, ExperimentConfig
from src.application.simulation.queries.simulate_sigma22 import (
    SimulateSigma22Query,
    SimulateSigma22QueryHandler,
)
from src.application.simulation.queries.verify_energy_identity import (
    VerifyEnergyIdentityQuery,
    VerifyEnergyIdentityQueryHandler,
)
from src.application.simulation.studies import commutator_reference
from src.domain.measurement.repositories import ArtifactRepository
from src.domain.shared.event_bus import EventBus
from src.domain.shared.task_runner import TaskRunner
from src.domain.vibronic.analytics import small_coupling_commutator

logger = logging.getLogger(__name__)

MODES = ("simulate", "sample", "fit", "analyze")


@dataclass(frozen=True)
class RunPipelineCommand:
    config: ExperimentConfig


class RunPipelineCommandHandler:

    def __init__(self, repo: ArtifactRepository, event_bus: EventBus, runner: TaskRunner):
        self._repo = repo
        self._event_bus = event_bus
        self._runner = runner

    def handle(self, command: RunPipelineCommand) -> FigureReportDTO:
        config = command.config
        if config.mode not in MODES:
            raise ConfigurationError(f"output.mode: '{config.mode}' no es uno de {', '.join(MODES)}.")
        writer = ArtifactWriter(self._repo, self._event_bus, config)
        summary = getattr(self, f"_{config.mode}")(config, writer)
        artifacts = writer.finish()
        logger.info(f"[RunPipeline] modo {config.mode}: {len(artifacts)} artefactos")
        return FigureReportDTO(command=config.command, artifacts=artifacts, summary={"mode": config.mode, **summary})

    # ── Modos ────────────────────────────────────────────────
    def _simulate(self, config: ExperimentConfig, writer: ArtifactWriter) -> dict:
        rows = SimulateSigma22QueryHandler(self._runner).handle(SimulateSigma22Query(
            params=config.params,
            electronic=config.electronic,
            motional=config.motional,
            times=config.times,
            g_grid=config.g_grid,
        ))
        writer.table("sigma22.csv", ("t", "g", "sigma22"), rows)
        return {"rows": len(rows)}

    def _sample(self, config: ExperimentConfig, writer: ArtifactWriter) -> dict:
        replicates = SampleRecordsCommandHandler(self._event_bus, self._runner).handle(SampleRecordsCommand(config))
        for r, records in enumerate(replicates):
            writer.records(f"records_r{r}.csv", records)
        return {"replicates": len(replicates), "records_per_replicate": len(replicates[0])}

    def _fit(self, config: ExperimentConfig, writer: ArtifactWriter) -> dict:
        fits = FitRecordsCommandHandler(self._repo, self._event_bus, self._runner).handle(FitRecordsCommand(config))
        powers = config.basis.powers
        header = (
            ("t", "records", "condition_number", "residual_rms")
            + tuple(f"c{p}" for p in powers)
            + tuple(f"stderr_c{p}" for p in powers)
            + ("estimate", "stderr")
        )
        rows = []
        for item in fits:
            estimate = item.estimate
            rows.append(
                (item.t, item.record_count, item.fit.condition_number, item.fit.residual_rms)
                + tuple(item.fit.coefficient(p) for p in powers)
                + tuple(item.fit.stderr(p) for p in powers)
                + ((estimate.value, estimate.stderr) if estimate is not None else (math.nan, math.nan))
            )
        writer.table("fit_summary.csv", header, rows)
        writer.json("fits.json", {
            "fits": [
                {
                    "t": item.t,
                    "records": item.record_count,
                    "fit": item.fit.to_dict(),
                    "estimate": None if item.estimate is None else {
                        "value": item.estimate.value, "stderr": item.estimate.stderr,
                    },
                }
                for item in fits
            ],
        })
        return {"times": len(fits)}

    def _analyze(self, config: ExperimentConfig, writer: ArtifactWriter) -> dict:
        params = config.params
        checks = VerifyEnergyIdentityQueryHandler(self._runner).handle(VerifyEnergyIdentityQuery(
            params=params, electronic=config.electronic, motional=config.motional, times=config.times,
        ))
        ground_input = config.electronic.excited_population == 0.0

        def commutator_columns(t: float) -> tuple[float, float]:
            if not ground_input:
                return math.nan, math.nan
            return (
                commutator_reference(params, config.electronic, config.motional, t),
                small_coupling_commutator(params, config.electronic, config.motional, t),
            )

        commutators = self._runner.map(commutator_columns, [c.t for c in checks])
        writer.table(
            "analyze.csv",
            ("t", "sigma22", "lhs", "rhs", "abs_diff", "commutator_closed_form", "commutator_small_g"),
            [
                (c.t, c.sigma22, c.lhs, c.rhs, c.abs_difference, closed, small_g)
                for c, (closed, small_g) in zip(checks, commutators)
            ],
        )
        return {"max_abs_diff": max((c.abs_difference for c in checks), default=0.0)}

"""
COMMAND: FitRecords
Ajuste de paridad de registros agrupados por tiempo. Los registros vienen
de un CSV externo (`fit.records_path`) o se generan con la configuración.
"""
import logging
from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass

from src.application.dtos import TimeFitDTO
from src.application.simulation.commands.sample_records import (
    SampleRecordsCommand,
    SampleRecordsCommandHandler,
)
from src.application.simulation.config import ExperimentConfig
from src.application.simulation.studies import extractor_for
from src.domain.measurement.estimation import fit_parity_polynomial
from src.domain.measurement.events import PolynomialFitted
from src.domain.measurement.repositories import ArtifactRepository
from src.domain.measurement.value_objects import MeasurementRecord
from src.domain.shared.event_bus import EventBus
from src.domain.shared.task_runner import TaskRunner

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FitRecordsCommand:
    config: ExperimentConfig


def group_by_time(records: Sequence[MeasurementRecord]) -> dict[float, list[MeasurementRecord]]:
    """Agrupa conservando el orden de aparición de cada tiempo."""
    groups: dict[float, list[MeasurementRecord]] = defaultdict(list)
    for record in records:
        groups[record.t].append(record)
    return dict(groups)


class FitRecordsCommandHandler:

    def __init__(self, repo: ArtifactRepository, event_bus: EventBus, runner: TaskRunner):
        self._repo = repo
        self._event_bus = event_bus
        self._runner = runner

    def _records(self, config: ExperimentConfig) -> list[MeasurementRecord]:
        if config.records_path:
            records = self._repo.load_records(config.records_path)
            logger.info(f"[FitRecords] {len(records)} registros leídos de {config.records_path}")
            return records
        sampler = SampleRecordsCommandHandler(self._event_bus, self._runner)
        return sampler.handle(SampleRecordsCommand(config))[0]

    def handle(self, command: FitRecordsCommand) -> list[TimeFitDTO]:
        config = command.config
        extractor = extractor_for(config.basis, config.offset)
        results = []
        for t, records in group_by_time(self._records(config)).items():
            fit = fit_parity_polynomial(records, config.basis, config.offset)
            self._event_bus.publish(PolynomialFitted(
                parity=fit.basis.parity.value, max_power=fit.basis.max_power, t=t,
                condition_number=fit.condition_number, residual_rms=fit.residual_rms,
            ))
            estimate = extractor(fit, config.params) if extractor is not None else None
            results.append(TimeFitDTO(t=t, record_count=len(records), fit=fit, estimate=estimate))
        return results

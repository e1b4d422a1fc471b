"""
COMMAND: SampleRecords
Registros con ruido de disparo para todos los tiempos de la configuración,
una lista por réplica. Con shots = 1 cada registro es un bit crudo.
"""
import logging
from dataclasses import dataclass

from src.application.simulation.config import ExperimentConfig
from src.domain.measurement.events import RecordsSampled
from src.domain.measurement.sampling import sample_sigma22
from src.domain.measurement.value_objects import MeasurementRecord
from src.domain.shared.event_bus import EventBus
from src.domain.shared.task_runner import TaskRunner

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SampleRecordsCommand:
    config: ExperimentConfig


class SampleRecordsCommandHandler:

    def __init__(self, event_bus: EventBus, runner: TaskRunner):
        self._event_bus = event_bus
        self._runner = runner

    def handle(self, command: SampleRecordsCommand) -> list[list[MeasurementRecord]]:
        config = command.config
        points = len(config.g_grid)

        def replicate(r: int) -> list[MeasurementRecord]:
            records = []
            for t_index, t in enumerate(config.times):
                records += sample_sigma22(
                    config.params, config.electronic, config.motional, t, config.g_grid,
                    config.shots, config.seed, replicate_index=r, point_offset=t_index * points,
                )
            return records

        replicates = self._runner.map(replicate, range(config.replicates))
        self._event_bus.publish_many([
            RecordsSampled(t=t, record_count=points, shots_per_point=config.shots, replicates=config.replicates)
            for t in config.times
        ])
        logger.info(f"[SampleRecords] {config.replicates} réplicas × {len(config.times)} tiempos × {points} puntos")
        return replicates

"""
Escritura de artefactos de un comando: cada archivo se guarda vía el
puerto ArtifactRepository y se anuncia con ArtifactStored. Al terminar
se escribe el manifiesto y se publica FigureCompleted.
"""
from collections.abc import Sequence

from src.application.simulation.config import ExperimentConfig
from src.application.simulation.manifest import MANIFEST_NAME, build_manifest
from src.domain.measurement.events import ArtifactStored, FigureCompleted
from src.domain.measurement.repositories import ArtifactRepository
from src.domain.measurement.value_objects import MeasurementRecord
from src.domain.shared.event_bus import EventBus


class ArtifactWriter:

    def __init__(self, repo: ArtifactRepository, event_bus: EventBus, config: ExperimentConfig):
        self._repo = repo
        self._event_bus = event_bus
        self._config = config
        self._names: list[str] = []

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._names)

    def _stored(self, name: str, location: str) -> str:
        self._names.append(name)
        self._event_bus.publish(ArtifactStored(name=name, location=location))
        return name

    def records(self, name: str, records: Sequence[MeasurementRecord]) -> str:
        name = self._config.prefix + name
        return self._stored(name, self._repo.save_records(name, records))

    def table(self, name: str, header: Sequence[str], rows: Sequence[Sequence]) -> str:
        name = self._config.prefix + name
        return self._stored(name, self._repo.save_table(name, header, rows))

    def json(self, name: str, payload: dict) -> str:
        name = self._config.prefix + name
        return self._stored(name, self._repo.save_json(name, payload))

    def finish(self) -> tuple[str, ...]:
        """Escribe el manifiesto (último artefacto) y publica FigureCompleted."""
        manifest = build_manifest(self._config, self._names + [self._config.prefix + MANIFEST_NAME])
        self.json(MANIFEST_NAME, manifest)
        self._event_bus.publish(FigureCompleted(command=self._config.command, artifacts=self.names))
        return self.names

"""
REPOSITORIO DE ARTEFACTOS EN MEMORIA — para tests.

Implementa el mismo Puerto que FileSystemArtifactRepository y guarda el
texto EXACTO que se escribiría en disco, así los tests comparan bytes.

Regla LSP: ambos adaptadores son intercambiables.
"""
from collections.abc import Sequence

from src.domain.measurement.exceptions import ArtifactNotFound
from src.domain.measurement.repositories import RECORD_COLUMNS, ArtifactRepository
from src.domain.measurement.value_objects import MeasurementRecord

from .codecs import parse_records, record_rows, render_csv, render_json


class InMemoryArtifactRepository(ArtifactRepository):
    """
    Uso en tests:
        repo = InMemoryArtifactRepository()
        handler = ReproduceFigure2CommandHandler(repo, bus, runner)
        handler.handle(command)
        assert "fig2_hamiltonian.csv" in repo.list_artifacts()
    """

    def __init__(self, files: dict[str, str] | None = None):
        self._store: dict[str, str] = dict(files or {})

    def save_records(self, name: str, records: Sequence[MeasurementRecord]) -> str:
        return self._put(name, render_csv(RECORD_COLUMNS, record_rows(records)))

    def load_records(self, location: str) -> list[MeasurementRecord]:
        if location not in self._store:
            raise ArtifactNotFound(location)
        return parse_records(self._store[location], location)

    def save_table(self, name: str, header: Sequence[str], rows: Sequence[Sequence]) -> str:
        return self._put(name, render_csv(header, rows))

    def save_json(self, name: str, payload: dict) -> str:
        return self._put(name, render_json(payload))

    def list_artifacts(self) -> list[str]:
        return list(self._store)

    def read(self, name: str) -> str:
        """Texto guardado (solo existe en el adaptador de tests)."""
        return self._store[name]

    def _put(self, name: str, text: str) -> str:
        self._store[name] = text
        return name

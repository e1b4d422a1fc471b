"""
REPOSITORIO DE ARTEFACTOS EN DISCO — adaptador de la CLI.

Escribe cada artefacto bajo un directorio de salida. La escritura es de
un solo dueño: solo el handler que termina una etapa llama a este
repositorio, nunca los trabajadores del pool.
"""
import logging
from collections.abc import Sequence
from pathlib import Path

from src.domain.measurement.exceptions import ArtifactNotFound
from src.domain.measurement.repositories import RECORD_COLUMNS, ArtifactRepository
from src.domain.measurement.value_objects import MeasurementRecord

from .codecs import SIGNIFICANT_DIGITS, parse_records, record_rows, render_csv, render_json

logger = logging.getLogger(__name__)


class FileSystemArtifactRepository(ArtifactRepository):

    def __init__(self, output_dir: str | Path, digits: int = SIGNIFICANT_DIGITS):
        self._root = Path(output_dir)
        self._digits = digits
        self._written: list[str] = []

    @property
    def root(self) -> Path:
        return self._root

    def save_records(self, name: str, records: Sequence[MeasurementRecord]) -> str:
        return self._write(name, render_csv(RECORD_COLUMNS, record_rows(records), self._digits))

    def load_records(self, location: str) -> list[MeasurementRecord]:
        path = Path(location)
        if not path.is_absolute() and not path.exists():
            path = self._root / path
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError as exc:
            raise ArtifactNotFound(location) from exc
        return parse_records(text, str(path))

    def save_table(self, name: str, header: Sequence[str], rows: Sequence[Sequence]) -> str:
        return self._write(name, render_csv(header, rows, self._digits))

    def save_json(self, name: str, payload: dict) -> str:
        return self._write(name, render_json(payload))

    def list_artifacts(self) -> list[str]:
        return list(self._written)

    def _write(self, name: str, text: str) -> str:
        path = self._root / name
        path.parent.mkdir(parents=True, exist_ok=True)
        # newline="" conserva los LF en cualquier plataforma
        with path.open("w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        if name not in self._written:
            self._written.append(name)
        logger.info(f"[FileSystemArtifactRepository] Escrito {path}")
        return str(path)

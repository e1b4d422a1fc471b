"""
PUERTO del repositorio de artefactos.

El dominio declara QUÉ se guarda (registros, tablas, documentos JSON),
no CÓMO: en disco para la CLI, en memoria para los tests.

Contrato de formato (lo cumplen todos los adaptadores):
  - CSV separado por comas, con cabecera, punto decimal, 12 cifras
    significativas y fin de línea LF.
  - JSON con claves ordenadas, sangría 2 y LF final.
"""
from abc import ABC, abstractmethod
from collections.abc import Sequence

from .value_objects import MeasurementRecord

RECORD_COLUMNS = ("g", "t", "shots", "successes", "p_hat")


class ArtifactRepository(ABC):

    @abstractmethod
    def save_records(self, name: str, records: Sequence[MeasurementRecord]) -> str:
        """Guarda registros con columnas g, t, shots, successes, p_hat. Devuelve la ubicación."""
        ...

    @abstractmethod
    def load_records(self, location: str) -> list[MeasurementRecord]:
        """Lee registros desde un CSV con las columnas de `save_records`."""
        ...

    @abstractmethod
    def save_table(self, name: str, header: Sequence[str], rows: Sequence[Sequence]) -> str:
        ...

    @abstractmethod
    def save_json(self, name: str, payload: dict) -> str:
        ...

    @abstractmethod
    def list_artifacts(self) -> list[str]:
        """Nombres guardados, en orden de escritura."""
        ...

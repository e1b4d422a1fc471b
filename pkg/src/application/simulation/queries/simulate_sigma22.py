"""
QUERY: SimulateSigma22
σ₂₂(t) exacto (sin ruido) sobre una malla de tiempos × acoplamientos.
"""
from collections.abc import Sequence
from dataclasses import dataclass

from src.domain.shared.task_runner import TaskRunner
from src.domain.vibronic.propagator import sigma22_series
from src.domain.vibronic.value_objects import ElectronicAmplitudes, ModelParams, MotionalSpec


@dataclass(frozen=True)
class SimulateSigma22Query:
    params: ModelParams
    electronic: ElectronicAmplitudes
    motional: MotionalSpec
    times: tuple[float, ...]
    g_grid: tuple[float, ...]


class SimulateSigma22QueryHandler:

    def __init__(self, runner: TaskRunner):
        self._runner = runner

    def handle(self, query: SimulateSigma22Query) -> list[tuple[float, float, float]]:
        """Filas (t, g, σ₂₂) en el orden de la malla: t externo, g interno."""
        def row_block(t: float) -> Sequence[tuple[float, float, float]]:
            values = sigma22_series(query.params, query.electronic, query.motional, t, query.g_grid)
            return [(t, g, float(p)) for g, p in zip(query.g_grid, values)]

        blocks = self._runner.map(row_block, list(query.times))
        return [row for block in blocks for row in block]

"""
Muestreo con ruido de disparo de la población excitada σ₂₂.

Modelo de ruido: cada disparo es una medida proyectiva de dos resultados,
así que los éxitos siguen Binomial(shots, p). Cada punto de la malla y
cada réplica usan su propio sub-flujo derivado de la semilla maestra: el
resultado no depende del orden ni del paralelismo.
"""
import logging
from collections.abc import Sequence

import numpy as np

from src.domain.measurement.exceptions import InvalidRecordError
from src.domain.measurement.value_objects import MeasurementRecord, SeedSpec
from src.domain.shared.task_runner import TaskRunner
from src.domain.vibronic.propagator import sigma22_series
from src.domain.vibronic.value_objects import ElectronicAmplitudes, ModelParams, MotionalSpec

logger = logging.getLogger(__name__)


def _check_shots(shots: int) -> None:
    if isinstance(shots, bool) or int(shots) != shots or shots < 1:
        raise InvalidRecordError(f"shots_per_point={shots!r} debe ser un entero ≥ 1.")


def draw_successes(probability: float, shots: int, seed: SeedSpec, point_index: int, replicate_index: int = 0) -> int:
    """Éxitos ~ Binomial(shots, p) desde el sub-flujo (punto, réplica)."""
    rng = seed.generator(point_index, replicate_index)
    return int(rng.binomial(int(shots), float(np.clip(probability, 0.0, 1.0))))


def sample_probabilities(
    g_grid: Sequence[float],
    t: float,
    probabilities: Sequence[float],
    shots_per_point: int,
    seed: SeedSpec,
    *,
    replicate_index: int = 0,
    point_offset: int = 0,
) -> list[MeasurementRecord]:
    """Registros con ruido para probabilidades ya calculadas (una por g)."""
    _check_shots(shots_per_point)
    if len(g_grid) != len(probabilities):
        raise InvalidRecordError(
            f"Se recibieron {len(g_grid)} valores de g y {len(probabilities)} probabilidades."
        )
    return [
        MeasurementRecord(
            g=float(g),
            t=t,
            shots=shots_per_point,
            successes=draw_successes(p, shots_per_point, seed, point_offset + i, replicate_index),
        )
        for i, (g, p) in enumerate(zip(g_grid, probabilities))
    ]


def noiseless_records(g_grid: Sequence[float], t: float, probabilities: Sequence[float]) -> list[MeasurementRecord]:
    return [MeasurementRecord.noiseless(float(g), t, float(p)) for g, p in zip(g_grid, probabilities)]


def sample_sigma22(
    params: ModelParams,
    electronic: ElectronicAmplitudes,
    motional: MotionalSpec,
    t: float,
    g_grid: Sequence[float],
    shots_per_point: int,
    seed: SeedSpec,
    *,
    replicate_index: int = 0,
    point_offset: int = 0,
) -> list[MeasurementRecord]:
    """Calcula σ₂₂ exacto en cada g y simula `shots_per_point` disparos por punto."""
    _check_shots(shots_per_point)
    probabilities = sigma22_series(params, electronic, motional, t, g_grid)
    records = sample_probabilities(
        g_grid,
        t,
        probabilities,
        shots_per_point,
        seed,
        replicate_index=replicate_index,
        point_offset=point_offset,
    )
    logger.debug(
        f"[Sampling] t={t:.6g}: {len(records)} puntos, {shots_per_point} disparos, réplica {replicate_index}"
    )
    return records


def sample_replicates(
    g_grid: Sequence[float],
    t: float,
    probabilities: Sequence[float],
    shots_per_point: int,
    seed: SeedSpec,
    replicates: int,
    runner: TaskRunner | None = None,
    *,
    point_offset: int = 0,
) -> list[list[MeasurementRecord]]:
    """Una lista de registros por réplica; cada réplica usa su propio índice de sub-flujo. Sin runner, en serie."""

    def replicate(r: int) -> list[MeasurementRecord]:
        return sample_probabilities(
            g_grid, t, probabilities, shots_per_point, seed,
            replicate_index=r, point_offset=point_offset,
        )

    indices = range(replicates)
    return runner.map(replicate, indices) if runner is not None else [replicate(r) for r in indices]

"""
ADAPTADORES del puerto TaskRunner.

SerialTaskRunner      — bucle simple (tests, --threads 1)
ThreadPoolTaskRunner  — concurrent.futures; numpy/scipy liberan el GIL
                        en el álgebra lineal y el muestreo.

Ambos devuelven los resultados en el orden de entrada: cada tarea lleva
su propio sub-flujo aleatorio, así que el resultado no depende de N.
"""
import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor

from src.domain.shared.task_runner import TaskRunner

logger = logging.getLogger(__name__)


class SerialTaskRunner(TaskRunner):

    def map(self, fn: Callable, items: Iterable) -> list:
        return [fn(item) for item in items]


class ThreadPoolTaskRunner(TaskRunner):

    def __init__(self, max_workers: int):
        if max_workers < 1:
            raise ValueError(f"max_workers debe ser ≥ 1 (recibido {max_workers})")
        self._max_workers = max_workers

    @property
    def max_workers(self) -> int:
        return self._max_workers

    def map(self, fn: Callable, items: Iterable) -> list:
        items = list(items)
        logger.debug(f"[ThreadPoolTaskRunner] {len(items)} tareas en {self._max_workers} hilos")
        with ThreadPoolExecutor(max_workers=self._max_workers) as pool:
            return list(pool.map(fn, items))

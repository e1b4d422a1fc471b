"""
PUERTO de ejecución: cómo se reparte una malla de trabajo.

Los barridos (g, t, n, réplica) son independientes entre sí; el dominio
solo necesita un `map` que conserve el orden. Quién lo ejecuta (un bucle
o un pool de hilos) lo decide el Composition Root.
"""
from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")


class TaskRunner(ABC):

    @abstractmethod
    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        """Aplica `fn` a cada item y devuelve los resultados en el mismo orden."""
        ...

"""
Fixtures compartidos para todos los tests.

Configuración de pytest con fixtures para:
- Parámetros del modelo (escenario de referencia)
- Adaptadores en memoria (repositorio, bus de eventos, runner serial)
- Configuraciones de figura construidas desde los presets
"""
import math

import factory.random
import pytest

from src.application.simulation.config import build_experiment
from src.application.simulation.presets import deep_merge, preset_for
from src.domain.vibronic.value_objects import Coherent, ElectronicAmplitudes, Fock, ModelParams
from src.infrastructure.concurrency.task_runners import SerialTaskRunner
from src.infrastructure.messaging.event_bus_adapters import InMemoryEventBus
from src.infrastructure.persistence.in_memory_repo import InMemoryArtifactRepository

ALPHA0 = math.sqrt(12.0)


@pytest.fixture(autouse=True)
def _deterministic_factories():
    """Faker y factory-boy con semilla fija: los parámetros aleatorios son reproducibles."""
    factory.random.reseed_random(1729)


# ══════════════════════════════════════════════════════════════
# MODELO
# ══════════════════════════════════════════════════════════════

@pytest.fixture
def carrier_params():
    """Banda cero con los parámetros de referencia (η=0.2, Δω=0.2, ν=5000)."""
    return ModelParams(sideband_order=0, fock_cutoff=12)


@pytest.fixture
def second_sideband_params():
    """Banda k=2 con base suficiente para |α0|² = 12."""
    return ModelParams(sideband_order=2, fock_cutoff=67)


@pytest.fixture
def superposition():
    return ElectronicAmplitudes.phase_superposition()


@pytest.fixture
def ground():
    return ElectronicAmplitudes.ground()


@pytest.fixture
def vacuum():
    return Fock(0)


@pytest.fixture
def coherent_input():
    return Coherent(ALPHA0)


# ══════════════════════════════════════════════════════════════
# ADAPTADORES
# ══════════════════════════════════════════════════════════════

@pytest.fixture
def artifact_repo():
    return InMemoryArtifactRepository()


@pytest.fixture
def event_bus():
    return InMemoryEventBus()


@pytest.fixture
def runner():
    return SerialTaskRunner()


# ══════════════════════════════════════════════════════════════
# HELPERS
# ══════════════════════════════════════════════════════════════

@pytest.fixture
def experiment():
    """Helper: ExperimentConfig de un comando con overrides sobre su preset."""
    def _build(command: str, overrides: dict | None = None):
        return build_experiment(command, deep_merge(preset_for(command), overrides or {}))

    return _build

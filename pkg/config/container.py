"""
COMPOSITION ROOT — ensambla todas las dependencias del proyecto.

Es el único archivo que conoce:
  - Adaptadores concretos (disco, memoria, pool de hilos, logging)
  - Qué implementación usar según el entorno

Regla: ningún otro módulo importa adaptadores directamente.
Solo este archivo los conoce.
"""
import os

from django.conf import settings

DJANGO_ENV = os.getenv("DJANGO_ENV", "development")


# ─────────────────────────────────────────────────────────────
# INFRAESTRUCTURA BASE
# ─────────────────────────────────────────────────────────────
def get_event_bus():
    if DJANGO_ENV == "test":
        from src.infrastructure.messaging.event_bus_adapters import InMemoryEventBus
        return InMemoryEventBus()
    from src.infrastructure.messaging.event_bus_adapters import LoggingEventBus
    return LoggingEventBus()


def get_artifact_repo(output_dir: str | None = None):
    from src.infrastructure.persistence.filesystem_repo import FileSystemArtifactRepository
    simulation = settings.ION_SIMULATION
    return FileSystemArtifactRepository(
        output_dir or simulation["DEFAULT_OUTPUT_DIR"],
        digits=simulation["CSV_SIGNIFICANT_DIGITS"],
    )


def get_task_runner(threads: int | None = None):
    """Hilos > 1 → pool; si no, bucle serial."""
    threads = threads or settings.ION_SIMULATION["DEFAULT_THREADS"]
    if threads > 1:
        from src.infrastructure.concurrency.task_runners import ThreadPoolTaskRunner
        return ThreadPoolTaskRunner(max_workers=threads)
    from src.infrastructure.concurrency.task_runners import SerialTaskRunner
    return SerialTaskRunner()


# ─────────────────────────────────────────────────────────────
# SIMULACIÓN — COMMAND HANDLERS
# ─────────────────────────────────────────────────────────────
def get_figure1_handler(output_dir: str | None = None, threads: int | None = None):
    from src.application.simulation.commands.reproduce_figure1 import ReproduceFigure1CommandHandler
    return ReproduceFigure1CommandHandler(
        repo=get_artifact_repo(output_dir), event_bus=get_event_bus(), runner=get_task_runner(threads)
    )


def get_figure2_handler(output_dir: str | None = None, threads: int | None = None):
    from src.application.simulation.commands.reproduce_figure2 import ReproduceFigure2CommandHandler
    return ReproduceFigure2CommandHandler(
        repo=get_artifact_repo(output_dir), event_bus=get_event_bus(), runner=get_task_runner(threads)
    )


def get_figure3_handler(output_dir: str | None = None, threads: int | None = None):
    from src.application.simulation.commands.reproduce_figure3 import ReproduceFigure3CommandHandler
    return ReproduceFigure3CommandHandler(
        repo=get_artifact_repo(output_dir), event_bus=get_event_bus(), runner=get_task_runner(threads)
    )


def get_figure4_handler(output_dir: str | None = None, threads: int | None = None):
    from src.application.simulation.commands.reproduce_figure4 import ReproduceFigure4CommandHandler
    return ReproduceFigure4CommandHandler(
        repo=get_artifact_repo(output_dir), event_bus=get_event_bus(), runner=get_task_runner(threads)
    )


def get_run_pipeline_handler(output_dir: str | None = None, threads: int | None = None):
    from src.application.simulation.commands.run_pipeline import RunPipelineCommandHandler
    return RunPipelineCommandHandler(
        repo=get_artifact_repo(output_dir), event_bus=get_event_bus(), runner=get_task_runner(threads)
    )

"""
Base de los management commands — Adaptador Primario (Puerto de Entrada).

Su única responsabilidad: traducir argumentos de línea de comandos ↔ Commands.

Flujo de una corrida:
  manage.py fig1 --config corrida.json
    → preset de la figura + documento del usuario (deep merge)
      → serializers DRF (forma) → build_experiment (física)
        → Handler (caso de uso)
          → Domain
          → ArtifactRepository (CSV/JSON)
        ← FigureReportDTO
    ← artefactos listados en stdout, código de salida

Códigos de salida: 0 éxito, 2 configuración, 3 fallo numérico, 4 E/S.
"""
import json
import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from src.application.dtos import FigureReportDTO
from src.application.simulation.config import ConfigurationError, ExperimentConfig, build_experiment
from src.application.simulation.presets import deep_merge, preset_for
from src.domain.shared.base import DomainError, NumericalFailure
from src.interfaces.cli.serializers import ExperimentDocumentSerializer, flatten_errors

EXIT_CONFIGURATION = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

VERBOSITY_LEVELS = {0: logging.WARNING, 1: logging.INFO}


# ─────────────────────────────────────────────────────────────
# HELPERS
# ─────────────────────────────────────────────────────────────
def read_document(path: str | None) -> dict:
    """Lee el JSON del usuario; sin --config el documento es vacío (solo preset)."""
    if path is None:
        return {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(f"{path}: no se pudo leer el archivo de configuración ({exc.strerror}).") from exc
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(
            f"{path}: JSON inválido en línea {exc.lineno}, columna {exc.colno}: {exc.msg}."
        ) from exc
    if not isinstance(document, dict):
        raise ConfigurationError(f"{path}: el documento debe ser un objeto JSON.")
    return document


def resolve_document(command: str, user_document: dict, seed: int | None = None, replicates: int | None = None) -> dict:
    """Preset + documento + flags, validado por los serializers. Devuelve el documento efectivo."""
    document = deep_merge(preset_for(command), user_document)
    sampling = document.get("sampling")
    if isinstance(sampling, dict):
        if seed is not None:
            sampling["master_seed"] = seed
        if replicates is not None:
            sampling["replicates"] = replicates

    serializer = ExperimentDocumentSerializer(data=document)
    if not serializer.is_valid():
        raise ConfigurationError("Configuración inválida:", flatten_errors(serializer.errors))
    # JSON canónico: tipos nativos, sin OrderedDict
    return json.loads(json.dumps(serializer.validated_data))


def handle_domain_error(exc: Exception) -> CommandError:
    """Convierte excepciones de dominio a CommandError con su código de salida."""
    if isinstance(exc, ConfigurationError):
        return CommandError(str(exc), returncode=EXIT_CONFIGURATION)
    if isinstance(exc, NumericalFailure):
        return CommandError(f"Fallo numérico: {exc}", returncode=EXIT_NUMERICAL)
    if isinstance(exc, OSError):
        return CommandError(f"Error de E/S: {exc}", returncode=EXIT_IO)
    if isinstance(exc, DomainError):
        return CommandError(f"Configuración no admitida: {exc}", returncode=EXIT_CONFIGURATION)
    raise exc


# ─────────────────────────────────────────────────────────────
# COMANDO BASE
# ─────────────────────────────────────────────────────────────
class BaseSimulationCommand(BaseCommand):
    """Flags comunes y mapeo de errores; cada subclase solo elige su caso de uso."""

    command_name = ""
    requires_system_checks: list = []

    def add_arguments(self, parser):
        parser.add_argument("--config", metavar="PATH", help="Documento JSON que se fusiona sobre el preset.")
        parser.add_argument("--seed", type=int, metavar="U64", help="Sobrescribe sampling.master_seed.")
        parser.add_argument("--out", metavar="DIR", help="Directorio de salida de los artefactos.")
        parser.add_argument("--threads", type=int, metavar="N", help="Hilos del pool (1 = serial).")
        parser.add_argument("--replicates", type=int, metavar="R", help="Sobrescribe sampling.replicates.")

    def execute_use_case(self, config: ExperimentConfig, output_dir: str, threads: int) -> FigureReportDTO:
        raise NotImplementedError

    def handle(self, *args, **options):
        logging.getLogger("src").setLevel(VERBOSITY_LEVELS.get(options["verbosity"], logging.DEBUG))
        output_dir = options["out"] or settings.ION_SIMULATION["DEFAULT_OUTPUT_DIR"]
        threads = options["threads"] or settings.ION_SIMULATION["DEFAULT_THREADS"]
        try:
            if threads < 1:
                raise ConfigurationError(f"--threads debe ser ≥ 1 (recibido {threads}).")
            document = resolve_document(
                self.command_name, read_document(options["config"]), options["seed"], options["replicates"]
            )
            config = build_experiment(self.command_name, document)
            report = self.execute_use_case(config, output_dir, threads)
        except (DomainError, ConfigurationError, OSError) as exc:
            raise handle_domain_error(exc) from exc

        for name in report.artifacts:
            self.stdout.write(str(Path(output_dir) / name))
        self.stdout.write(self.style.SUCCESS(
            f"{report.command}: {len(report.artifacts)} artefactos en {output_dir}"
        ))

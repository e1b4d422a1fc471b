"""
Manifiesto JSON de cada comando: qué se corrió, con qué semilla y versiones.
"""
from datetime import datetime, timezone

import django
import numpy
import scipy

import src
from src.application.simulation.config import ExperimentConfig

MANIFEST_NAME = "manifest.json"


def package_versions() -> dict[str, str]:
    return {
        "ion_commutator_lab": src.__version__,
        "numpy": numpy.__version__,
        "scipy": scipy.__version__,
        "django": django.get_version(),
    }


def build_manifest(config: ExperimentConfig, artifacts: list[str]) -> dict:
    return {
        "command": config.command,
        "config_sha256": config.config_hash,
        "config": config.effective,
        "master_seed": config.seed.master_seed,
        "replicates": config.replicates,
        "versions": package_versions(),
        "created_at": datetime.now(timezone.utc).isoformat(),
        "artifacts": list(artifacts),
    }

"""
Django Settings — Ion Commutator Lab.

No hay base de datos ni vistas HTTP: Django aporta los comandos de
gestión, la configuración de logging y los serializers de DRF que
validan los documentos JSON de cada corrida.
"""
import os
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent

# ─────────────────────────────────────────────────────────────
# SEGURIDAD
# ─────────────────────────────────────────────────────────────
SECRET_KEY = os.getenv("DJANGO_SECRET_KEY", "dev-insecure-key-change-in-production")
DEBUG = os.getenv("DJANGO_DEBUG", "True") == "True"
ALLOWED_HOSTS: list[str] = []

# ─────────────────────────────────────────────────────────────
# GENERAL
# ─────────────────────────────────────────────────────────────
LANGUAGE_CODE = "es-pe"
TIME_ZONE = "America/Lima"
USE_I18N = True
USE_TZ = True

# ─────────────────────────────────────────────────────────────
# APPS
# ─────────────────────────────────────────────────────────────
INSTALLED_APPS = [
    # Third party
    "rest_framework",
    # Apps internas (solo la CLI: management commands + serializers)
    "src.interfaces.cli",
]

# Sin persistencia relacional: los artefactos son archivos CSV/JSON
DATABASES: dict = {}

# ─────────────────────────────────────────────────────────────
# LOGGING
# ─────────────────────────────────────────────────────────────
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "standard"},
    },
    "loggers": {
        "src": {"handlers": ["console"], "level": "INFO", "propagate": False},
    },
}

# ─────────────────────────────────────────────────────────────
# SIMULACIÓN
# Los parámetros físicos de cada corrida viven en el documento JSON
# (--config), nunca en variables de entorno.
# ─────────────────────────────────────────────────────────────
ION_SIMULATION = {
    "CSV_SIGNIFICANT_DIGITS": 12,
    "DEFAULT_OUTPUT_DIR": "results",
    "DEFAULT_THREADS": 1,
}

# ─────────────────────────────────────────────────────────────
# ENTORNO
# ─────────────────────────────────────────────────────────────
DJANGO_ENV = os.getenv("DJANGO_ENV", "development")  # development | test

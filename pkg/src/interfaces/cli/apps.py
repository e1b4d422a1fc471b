"""
AppConfig de la CLI.
Django la necesita para descubrir los management commands fig1..fig4 y run.
"""
from django.apps import AppConfig


class CliConfig(AppConfig):
    name = "src.interfaces.cli"
    label = "ion_cli"
    verbose_name = "Ion Commutator Lab CLI"

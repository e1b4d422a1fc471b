"""
manage.py fig4: barrido temporal del conmutador por banda lateral, con certificación.
"""
from config.container import get_figure4_handler
from src.application.simulation.commands.reproduce_figure4 import ReproduceFigure4Command
from src.interfaces.cli.base import BaseSimulationCommand


class Command(BaseSimulationCommand):
    help = "Conmutador estimado frente a t para cada banda lateral y certificación en Δωt = π."
    command_name = "fig4"

    def execute_use_case(self, config, output_dir, threads):
        handler = get_figure4_handler(output_dir, threads)
        return handler.handle(ReproduceFigure4Command(config))

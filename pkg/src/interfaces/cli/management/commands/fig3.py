"""
manage.py fig3: conmutador parcialmente integrado desde el término cuadrático de σ₂₂(g).
"""
from config.container import get_figure3_handler
from src.application.simulation.commands.reproduce_figure3 import ReproduceFigure3Command
from src.interfaces.cli.base import BaseSimulationCommand


class Command(BaseSimulationCommand):
    help = "Registros, ajuste par y término c₂g² para |1⟩ ⊗ |α0⟩ en la banda k."
    command_name = "fig3"

    def execute_use_case(self, config, output_dir, threads):
        handler = get_figure3_handler(output_dir, threads)
        return handler.handle(ReproduceFigure3Command(config))

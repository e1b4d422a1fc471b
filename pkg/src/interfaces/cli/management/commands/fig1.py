"""
manage.py fig1: ⟨Ĥ(t)⟩ desde el término lineal de σ₂₂(g), estado de Fock |0⟩.
"""
from config.container import get_figure1_handler
from src.application.simulation.commands.reproduce_figure1 import ReproduceFigure1Command
from src.interfaces.cli.base import BaseSimulationCommand


class Command(BaseSimulationCommand):
    help = "Registros, ajuste impar y término lineal c₁g para la superposición de fase π/2."
    command_name = "fig1"

    def execute_use_case(self, config, output_dir, threads):
        handler = get_figure1_handler(output_dir, threads)
        return handler.handle(ReproduceFigure1Command(config))

"""
manage.py fig2: ⟨Ĥ(t)⟩ extraído para cada |n⟩ de fock_states.
"""
from config.container import get_figure2_handler
from src.application.simulation.commands.reproduce_figure2 import ReproduceFigure2Command
from src.interfaces.cli.base import BaseSimulationCommand


class Command(BaseSimulationCommand):
    help = "Estimaciones de ⟨Ĥ⟩ por estado de Fock junto a su valor analítico."
    command_name = "fig2"

    def execute_use_case(self, config, output_dir, threads):
        handler = get_figure2_handler(output_dir, threads)
        return handler.handle(ReproduceFigure2Command(config))

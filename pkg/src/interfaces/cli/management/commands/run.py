"""
manage.py run: composición libre: simulate | sample | fit | analyze (output.mode).
"""
from config.container import get_run_pipeline_handler
from src.application.simulation.commands.run_pipeline import RunPipelineCommand
from src.interfaces.cli.base import BaseSimulationCommand


class Command(BaseSimulationCommand):
    help = "Ejecuta una etapa del pipeline según output.mode del documento de configuración."
    command_name = "run"

    def execute_use_case(self, config, output_dir, threads):
        handler = get_run_pipeline_handler(output_dir, threads)
        return handler.handle(RunPipelineCommand(config))

"""
FEATURE TESTS - Estudios de cobertura Monte Carlo con los presets

Cada figura se repite con muchas semillas (réplicas con sub-flujos
propios) y se exige que la banda de 3σ contenga el valor analítico en la
fracción esperada de casos.
"""
import pytest

from src.application.simulation.commands.reproduce_figure1 import (
    ReproduceFigure1Command,
    ReproduceFigure1CommandHandler,
)
from src.application.simulation.commands.reproduce_figure2 import (
    ReproduceFigure2Command,
    ReproduceFigure2CommandHandler,
)
from src.application.simulation.commands.reproduce_figure3 import (
    ReproduceFigure3Command,
    ReproduceFigure3CommandHandler,
)
from src.application.simulation.commands.reproduce_figure4 import (
    ReproduceFigure4Command,
    ReproduceFigure4CommandHandler,
)

pytestmark = [pytest.mark.feature, pytest.mark.slow]


def replicas(count: int) -> dict:
    return {"sampling": {"replicates": count}}


class TestHamiltonianCoverage:

    def test_carrier_superposition_over_100_seeds(self, artifact_repo, event_bus, runner, experiment):
        handler = ReproduceFigure1CommandHandler(artifact_repo, event_bus, runner)
        report = handler.handle(ReproduceFigure1Command(experiment("fig1", replicas(100))))
        assert report.summary["coverage_3sigma"] >= 0.95

    def test_fock_states_zero_to_six(self, artifact_repo, event_bus, runner, experiment):
        """5·10³ disparos, n = 0..6 y 100 semillas: 700 celdas."""
        config = experiment("fig2", replicas(100))
        assert config.shots == 5000
        assert tuple(config.fock_states) == tuple(range(7))
        handler = ReproduceFigure2CommandHandler(artifact_repo, event_bus, runner)
        report = handler.handle(ReproduceFigure2Command(config))
        assert report.summary["cells"] == 700
        assert report.summary["coverage_3sigma"] >= 0.93


class TestCommutatorCoverage:

    def test_coherent_input_over_100_seeds(self, artifact_repo, event_bus, runner, experiment):
        handler = ReproduceFigure3CommandHandler(artifact_repo, event_bus, runner)
        report = handler.handle(ReproduceFigure3Command(experiment("fig3", replicas(100))))
        assert report.summary["coverage_3sigma"] >= 0.95

    def test_time_series_and_certification(self, artifact_repo, event_bus, runner, experiment):
        """2·10⁴ disparos, 40 tiempos y 50 semillas por banda lateral; certificación a más de 5σ en Δωt ≈ π."""
        config = experiment("fig4", replicas(50))
        assert config.shots == 20_000
        assert len(config.times) == 40
        handler = ReproduceFigure4CommandHandler(artifact_repo, event_bus, runner)
        report = handler.handle(ReproduceFigure4Command(config))
        certification = report.summary["certification"]
        assert set(certification) == {"0", "2"}
        for sideband in certification.values():
            assert sideband["coverage_3sigma"] >= 0.93
            assert sideband["certified"] is True
            assert sideband["z_score"] > 5
            assert sideband["certified_fraction"] >= 0.95

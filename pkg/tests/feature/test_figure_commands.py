"""
FEATURE TESTS - Comandos de figura con adaptadores en memoria

Cada handler recibe el repositorio en memoria, el bus en memoria y el
runner serial; se verifican los artefactos (texto exacto que iría a
disco), los eventos publicados y el resumen devuelto.
"""
import csv
import io
import json
import math

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
from src.domain.measurement.events import ArtifactStored, FigureCompleted, PolynomialFitted, RecordsSampled
from src.domain.measurement.exceptions import DegenerateWeights
from src.domain.vibronic.analytics import commutator_expectation
from src.domain.vibronic.value_objects import ModelParams
from src.infrastructure.persistence.in_memory_repo import InMemoryArtifactRepository
from tests.conftest import ALPHA0

pytestmark = pytest.mark.feature

NOISELESS = {"sampling": {"shots": 10 ** 12}}


def read_csv(repo, name: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(repo.read(name))))


class TestFigure1:

    @pytest.fixture
    def handler(self, artifact_repo, event_bus, runner):
        return ReproduceFigure1CommandHandler(artifact_repo, event_bus, runner)

    def test_estimate_matches_analytic_without_noise(self, handler, experiment):
        report = handler.handle(ReproduceFigure1Command(experiment("fig1", NOISELESS)))
        expected = math.exp(-0.02) * math.sin(2.0)
        assert report.summary["hamiltonian_analytic"] == pytest.approx(expected, rel=1e-12)
        assert report.summary["hamiltonian_estimate"] == pytest.approx(expected, rel=5e-3)

    def test_artifacts_and_manifest_last(self, handler, experiment, artifact_repo):
        report = handler.handle(ReproduceFigure1Command(experiment("fig1")))
        assert report.artifacts == (
            "fig1_records.csv",
            "fig1_fit_curve.csv",
            "fig1_linear_term.csv",
            "fig1_estimates.csv",
            "fig1_fit.json",
            "fig1_manifest.json",
        )
        manifest = json.loads(artifact_repo.read("fig1_manifest.json"))
        assert manifest["artifacts"] == list(report.artifacts)
        assert manifest["command"] == "fig1"
        assert len(manifest["config_sha256"]) == 64

    def test_fit_curve_starts_at_one_half(self, handler, experiment, artifact_repo):
        handler.handle(ReproduceFigure1Command(experiment("fig1")))
        rows = read_csv(artifact_repo, "fig1_fit_curve.csv")
        assert len(rows) == 101
        assert float(rows[0]["g"]) == 0.0
        assert float(rows[0]["sigma22_fit"]) == 0.5
        assert float(rows[0]["sigma22_exact"]) == pytest.approx(0.5, abs=1e-15)

    def test_records_have_grid_and_shots(self, handler, experiment, artifact_repo):
        handler.handle(ReproduceFigure1Command(experiment("fig1")))
        rows = read_csv(artifact_repo, "fig1_records.csv")
        assert len(rows) == 20
        assert float(rows[-1]["g"]) == pytest.approx(0.05)
        assert {row["shots"] for row in rows} == {"1000"}

    def test_events(self, handler, experiment, event_bus):
        handler.handle(ReproduceFigure1Command(experiment("fig1", {"sampling": {"replicates": 3}})))
        assert len(event_bus.get_events_of_type(RecordsSampled)) == 1
        assert event_bus.get_events_of_type(RecordsSampled)[0].replicates == 3
        assert event_bus.get_events_of_type(PolynomialFitted)[0].parity == "odd"
        assert len(event_bus.get_events_of_type(ArtifactStored)) == 6
        assert isinstance(event_bus.published[-1], FigureCompleted)

    def test_replicates_are_reported(self, handler, experiment, artifact_repo):
        report = handler.handle(ReproduceFigure1Command(experiment("fig1", {"sampling": {"replicates": 4}})))
        rows = read_csv(artifact_repo, "fig1_estimates.csv")
        assert [row["replicate"] for row in rows] == ["0", "1", "2", "3"]
        assert 0.0 <= report.summary["coverage_3sigma"] <= 1.0

    def test_same_seed_same_bytes(self, experiment, event_bus, runner):
        first, second = InMemoryArtifactRepository(), InMemoryArtifactRepository()
        ReproduceFigure1CommandHandler(first, event_bus, runner).handle(ReproduceFigure1Command(experiment("fig1")))
        ReproduceFigure1CommandHandler(second, event_bus, runner).handle(ReproduceFigure1Command(experiment("fig1")))
        for name in ("fig1_records.csv", "fig1_estimates.csv", "fig1_fit_curve.csv"):
            assert first.read(name) == second.read(name)


class TestFigure2:

    @pytest.fixture
    def report_and_repo(self, artifact_repo, event_bus, runner, experiment):
        config = experiment("fig2", {"input_state": {"fock_states": [0, 1, 2]}, **NOISELESS})
        report = ReproduceFigure2CommandHandler(artifact_repo, event_bus, runner).handle(
            ReproduceFigure2Command(config)
        )
        return report, artifact_repo

    def test_analytic_column_follows_mode_function(self, report_and_repo):
        _, repo = report_and_repo
        rows = read_csv(repo, "fig2_hamiltonian.csv")
        assert [row["n"] for row in rows] == ["0", "1", "2"]
        analytic = [float(row["analytic"]) for row in rows]
        assert analytic[0] == pytest.approx(math.exp(-0.02) * math.sin(2.0), rel=1e-11)
        assert analytic[1] / analytic[0] == pytest.approx(0.96, rel=1e-10)

    def test_estimates_track_each_fock_state(self, report_and_repo):
        _, repo = report_and_repo
        for row in read_csv(repo, "fig2_hamiltonian.csv"):
            assert float(row["estimate"]) == pytest.approx(float(row["analytic"]), rel=5e-3)

    def test_one_record_file_per_fock_state(self, report_and_repo):
        report, repo = report_and_repo
        for n in (0, 1, 2):
            assert f"fig2_records_n{n}.csv" in report.artifacts
        assert set(json.loads(repo.read("fig2_fits.json"))["fits"]) == {"0", "1", "2"}
        assert report.summary["cells"] == 3

    def test_fock_states_use_disjoint_substreams(self, artifact_repo, event_bus, runner, experiment):
        config = experiment("fig2", {"input_state": {"fock_states": [3, 3]}})
        ReproduceFigure2CommandHandler(artifact_repo, event_bus, runner).handle(ReproduceFigure2Command(config))
        rows = read_csv(artifact_repo, "fig2_estimates.csv")
        assert rows[0]["estimate"] != rows[1]["estimate"]


class TestFigure3:

    @pytest.fixture
    def handler(self, artifact_repo, event_bus, runner):
        return ReproduceFigure3CommandHandler(artifact_repo, event_bus, runner)

    def test_commutator_estimate(self, handler, experiment):
        report = handler.handle(ReproduceFigure3Command(experiment("fig3", NOISELESS)))
        expected = commutator_expectation(ModelParams(sideband_order=2, fock_cutoff=67), ALPHA0, 40.0)
        assert report.summary["sideband_order"] == 2
        assert report.summary["commutator_analytic"] == pytest.approx(expected, rel=1e-12)
        assert report.summary["commutator_estimate"] == pytest.approx(expected, rel=1e-2)

    def test_quadratic_curve_starts_at_zero(self, handler, experiment, artifact_repo):
        handler.handle(ReproduceFigure3Command(experiment("fig3")))
        first = read_csv(artifact_repo, "fig3_fit_curve.csv")[0]
        assert float(first["sigma22_fit"]) == 0.0
        assert float(first["sigma22_exact"]) == 0.0
        assert float(read_csv(artifact_repo, "fig3_quadratic_term.csv")[0]["c2_g2"]) == 0.0

    def test_fit_is_even(self, handler, experiment, artifact_repo):
        handler.handle(ReproduceFigure3Command(experiment("fig3")))
        fit = json.loads(artifact_repo.read("fig3_fit.json"))["fit"]
        assert fit["parity"] == "even"
        assert fit["powers"] == [2, 4, 6]
        assert fit["offset"] == 0.0

    def test_first_sideband_is_degenerate(self, handler, experiment):
        """Con Δφ = 0 los pesos de la banda k=1 son nulos: todos los registros valen 0."""
        with pytest.raises(DegenerateWeights):
            handler.handle(ReproduceFigure3Command(experiment("fig3", {"model": {"sideband_order": 1}})))


class TestFigure4:

    @pytest.fixture
    def report_and_repo(self, artifact_repo, event_bus, runner, experiment):
        config = experiment("fig4", {"sampling": {"time_grid": {"points": 5}, "shots": 10 ** 12}})
        report = ReproduceFigure4CommandHandler(artifact_repo, event_bus, runner).handle(
            ReproduceFigure4Command(config)
        )
        return report, artifact_repo

    def test_rows_per_sideband_and_time(self, report_and_repo):
        _, repo = report_and_repo
        rows = read_csv(repo, "fig4_commutator.csv")
        assert len(rows) == 10
        assert [row["sideband_order"] for row in rows] == ["2"] * 5 + ["0"] * 5

    def test_time_zero_is_degenerate(self, report_and_repo):
        _, repo = report_and_repo
        rows = read_csv(repo, "fig4_commutator.csv")
        zero_rows = [row for row in rows if float(row["t"]) == 0.0]
        assert [row["status"] for row in zero_rows] == ["degenerate", "degenerate"]
        assert all(row["status"] == "ok" for row in rows if float(row["t"]) > 0.0)

    def test_certification_at_half_period(self, report_and_repo):
        report, repo = report_and_repo
        certification = json.loads(repo.read("fig4_certification.json"))
        assert certification["sigmas"] == 5.0
        second = certification["sidebands"]["2"]
        assert second["detuning_t"] == pytest.approx(math.pi)
        assert second["certified"] is True
        assert second["z_score"] > 5.0
        assert report.summary["certification"]["0"]["certified"] is True

    def test_estimates_follow_closed_form(self, report_and_repo):
        _, repo = report_and_repo
        for row in read_csv(repo, "fig4_commutator.csv"):
            if row["status"] == "ok" and abs(float(row["analytic"])) > 1e-3:
                assert float(row["estimate"]) == pytest.approx(float(row["analytic"]), rel=5e-2)

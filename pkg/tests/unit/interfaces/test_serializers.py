"""
UNIT TESTS - Serializers DRF del documento de configuración
"""
import pytest

from src.application.simulation.config import ConfigurationError
from src.application.simulation.presets import preset_for
from src.interfaces.cli.base import read_document, resolve_document
from src.interfaces.cli.serializers import ExperimentDocumentSerializer, flatten_errors

pytestmark = pytest.mark.unit


def errors_for(document: dict) -> list[str]:
    serializer = ExperimentDocumentSerializer(data=document)
    assert not serializer.is_valid()
    return flatten_errors(serializer.errors)


class TestExperimentDocumentSerializer:

    @pytest.mark.parametrize("command", ["fig1", "fig2", "fig3", "fig4", "run"])
    def test_presets_are_valid(self, command):
        assert ExperimentDocumentSerializer(data=preset_for(command)).is_valid()

    def test_unknown_key_in_section(self):
        document = preset_for("fig1")
        document["sampling"]["shot"] = 10
        assert errors_for(document) == ["sampling.shot: Campo desconocido."]

    def test_unknown_top_level_section(self):
        document = preset_for("fig1")
        document["plots"] = {}
        assert errors_for(document) == ["plots: Campo desconocido."]

    def test_custom_electronic_needs_amplitudes(self):
        document = preset_for("fig1")
        document["input_state"]["electronic"]["preset"] = "custom"
        assert any(line.startswith("input_state.electronic.gamma1") for line in errors_for(document))

    def test_times_or_grid_required(self):
        document = preset_for("fig1")
        document["sampling"]["times"] = None
        assert any(line.startswith("sampling.times") for line in errors_for(document))

    def test_g_min_above_g_max(self):
        document = preset_for("fig1")
        document["sampling"]["g_min"] = 1.0
        assert any(line.startswith("sampling.g_min") for line in errors_for(document))

    def test_seed_range(self):
        document = preset_for("fig1")
        document["sampling"]["master_seed"] = 2 ** 64
        assert any(line.startswith("sampling.master_seed") for line in errors_for(document))

    def test_complex_pair_length(self):
        document = preset_for("fig3")
        document["input_state"]["motional"]["alpha0"] = [1.0]
        assert any(line.startswith("input_state.motional.alpha0") for line in errors_for(document))


class TestResolveDocument:

    def test_flags_override_document(self):
        document = resolve_document("fig1", {"sampling": {"master_seed": 5}}, seed=7, replicates=3)
        assert document["sampling"]["master_seed"] == 7
        assert document["sampling"]["replicates"] == 3

    def test_invalid_document_lists_paths(self):
        with pytest.raises(ConfigurationError) as exc_info:
            resolve_document("fig1", {"model": {"fock_cutoff": -1}})
        assert exc_info.value.errors[0].startswith("model.fock_cutoff")

    def test_without_config_file_document_is_empty(self):
        assert read_document(None) == {}

    def test_non_object_document(self, tmp_path):
        path = tmp_path / "lista.json"
        path.write_text("[1, 2]")
        with pytest.raises(ConfigurationError):
            read_document(str(path))

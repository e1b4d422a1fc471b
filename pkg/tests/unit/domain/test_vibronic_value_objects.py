"""
UNIT TESTS - Value Objects del dominio vibrónico

Validación al construir, fábricas de estados electrónicos y el vector
de estado vibrónico.
"""
import math

import numpy as np
import pytest

from src.domain.vibronic.exceptions import InvalidModelParameters, InvalidStateError
from src.domain.vibronic.value_objects import (
    Coherent,
    ElectronicAmplitudes,
    Fock,
    ModelParams,
    NumberDistribution,
    VibronicState,
)

pytestmark = pytest.mark.unit


class TestModelParams:

    def test_defaults_are_reference_scenario(self):
        params = ModelParams()
        assert params.sideband_order == 0
        assert params.lamb_dicke == 0.2
        assert params.detuning == 0.2
        assert params.trap_frequency == 5000.0
        assert params.coupling == 1.0

    def test_coupling_is_scale_times_base(self):
        params = ModelParams(base_coupling=2.0, coupling_scale=0.05)
        assert params.coupling == pytest.approx(0.1)

    def test_dimension(self):
        assert ModelParams(fock_cutoff=9).dimension == 20

    def test_with_helpers_return_new_instances(self):
        params = ModelParams()
        assert params.with_coupling(0.3).coupling_scale == 0.3
        assert params.with_cutoff(5).fock_cutoff == 5
        assert params.coupling_scale == 1.0

    @pytest.mark.parametrize(
        "field_name, value",
        [
            ("sideband_order", -1),
            ("sideband_order", 1.5),
            ("lamb_dicke", 0.0),
            ("base_coupling", -1.0),
            ("coupling_scale", -0.1),
            ("fock_cutoff", 0),
            ("detuning", math.inf),
            ("laser_phase", math.nan),
        ],
    )
    def test_invalid_values_raise(self, field_name, value):
        with pytest.raises(InvalidModelParameters) as exc_info:
            ModelParams(**{field_name: value})
        assert exc_info.value.field_name == field_name

    def test_is_immutable(self):
        params = ModelParams()
        with pytest.raises(AttributeError):
            params.detuning = 0.3


class TestElectronicAmplitudes:

    def test_phase_superposition(self):
        """γ1 = i/√2, γ2 = 1/√2: coherencia i/2 y σ₂₂ = 1/2."""
        state = ElectronicAmplitudes.phase_superposition()
        assert state.coherence == pytest.approx(0.5j)
        assert state.excited_population == pytest.approx(0.5)

    def test_ground_and_excited(self):
        assert ElectronicAmplitudes.ground().excited_population == 0.0
        assert ElectronicAmplitudes.excited().excited_population == 1.0

    def test_unnormalized_raises(self):
        with pytest.raises(InvalidStateError, match="debe ser 1"):
            ElectronicAmplitudes(1.0, 0.1)


class TestMotionalSpecs:

    def test_fock_rejects_negative(self):
        with pytest.raises(InvalidStateError):
            Fock(-1)

    def test_coherent_mean_number(self):
        assert Coherent(math.sqrt(12.0)).mean_number == pytest.approx(12.0)

    def test_coherent_rejects_non_finite(self):
        with pytest.raises(InvalidStateError):
            Coherent(complex(math.inf, 0.0))

    def test_distribution_must_sum_to_one(self):
        with pytest.raises(InvalidStateError, match="Σ P_n"):
            NumberDistribution((0.5, 0.4))

    def test_distribution_rejects_negative_entries(self):
        with pytest.raises(InvalidStateError):
            NumberDistribution((1.2, -0.2))

    def test_distribution_cutoff(self):
        assert NumberDistribution((0.25, 0.25, 0.5)).fock_cutoff == 2


class TestVibronicState:

    def test_basis_state(self):
        state = VibronicState.basis(2, 3, fock_cutoff=5)
        assert state.excited_population == 1.0
        assert state.amplitudes[1, 3] == 1.0
        assert state.fock_cutoff == 5

    def test_basis_out_of_range_raises(self):
        with pytest.raises(InvalidStateError):
            VibronicState.basis(2, 6, fock_cutoff=5)
        with pytest.raises(InvalidStateError):
            VibronicState.basis(3, 0, fock_cutoff=5)

    def test_product_state_population(self):
        motional = np.zeros(4, dtype=complex)
        motional[1] = 1.0
        state = VibronicState.product(ElectronicAmplitudes.phase_superposition(), motional)
        assert state.norm == pytest.approx(1.0)
        assert state.excited_population == pytest.approx(0.5)

    def test_flat_index_layout(self):
        """Índice plano e_fila·(N_max+1) + n."""
        state = VibronicState.basis(2, 1, fock_cutoff=3)
        assert np.flatnonzero(state.flat()).tolist() == [4 + 1]

    def test_unnormalized_raises(self):
        with pytest.raises(InvalidStateError):
            VibronicState(np.ones((2, 3)))

    def test_amplitudes_are_read_only(self):
        state = VibronicState.basis(1, 0, fock_cutoff=2)
        with pytest.raises(ValueError):
            state.amplitudes[0, 0] = 0.5

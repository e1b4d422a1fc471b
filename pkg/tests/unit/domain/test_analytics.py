"""
UNIT TESTS - Expresiones cerradas de referencia

⟨Ĥ(t)⟩ en la banda cero, identidad con σ₂₂, conmutador parcialmente
integrado y su reescritura con w_n² P_{n+k}.
"""
import math

import numpy as np
import pytest

from src.domain.vibronic.analytics import (
    commutator_expectation,
    commutator_expectation_weighted,
    energy_rate,
    h_expectation_fock,
    h_expectation_general,
    h_expectation_t0,
    h_from_sigma22,
    heisenberg_energy,
    small_coupling_commutator,
)
from src.domain.vibronic.exceptions import CutoffInsufficient, InvalidModelParameters, WrongSideband, ZeroDetuning
from src.domain.vibronic.propagator import sigma22_exact
from src.domain.vibronic.special_functions import mode_function
from src.domain.vibronic.states import number_statistics, product_state
from src.domain.vibronic.value_objects import Coherent, ElectronicAmplitudes, Fock, ModelParams

pytestmark = pytest.mark.unit

ALPHA0 = math.sqrt(12.0)


class TestCarrierHamiltonian:
    """⟨Ĥ(t)⟩ = |κ| f_0(n;η)(γ1γ2* e^{−iΔωt} + c.c.)."""

    @pytest.mark.parametrize("n", range(7))
    def test_superposition_value_at_reference_time(self, n):
        params = ModelParams(fock_cutoff=8)
        expected = mode_function(params, n) * math.sin(2.0)
        assert h_expectation_fock(params, ElectronicAmplitudes.phase_superposition(), n, 10.0) == pytest.approx(
            expected, rel=1e-14
        )

    def test_fock_ratio_is_laguerre(self):
        params = ModelParams(fock_cutoff=2)
        electronic = ElectronicAmplitudes.phase_superposition()
        ratio = h_expectation_fock(params, electronic, 1, 10.0) / h_expectation_fock(params, electronic, 0, 10.0)
        assert ratio == pytest.approx(0.96, rel=1e-14)

    def test_initial_value_vanishes_for_superposition(self):
        params = ModelParams(fock_cutoff=2)
        assert h_expectation_t0(params, ElectronicAmplitudes.phase_superposition(), 0) == pytest.approx(0.0, abs=1e-16)

    def test_initial_value_for_real_superposition(self):
        params = ModelParams(fock_cutoff=2)
        electronic = ElectronicAmplitudes(1 / math.sqrt(2.0), 1 / math.sqrt(2.0))
        assert h_expectation_t0(params, electronic, 0) == pytest.approx(math.exp(-0.02))

    def test_general_equals_fock_for_delta_distribution(self):
        params = ModelParams(fock_cutoff=5)
        electronic = ElectronicAmplitudes.phase_superposition()
        general = h_expectation_general(params, electronic, number_statistics(Fock(3), 5), 7.0)
        assert general == pytest.approx(h_expectation_fock(params, electronic, 3, 7.0), rel=1e-14)

    def test_matches_state_vector_contraction(self):
        """La fórmula cerrada a t=0 coincide con ⟨ψ|Ĥ(t)|ψ⟩ del estado evolucionado a g → 0."""
        params = ModelParams(coupling_scale=1e-9, fock_cutoff=4)
        electronic = ElectronicAmplitudes.phase_superposition()
        state = product_state(electronic, Fock(2), 4)
        contraction = heisenberg_energy(params, state, 10.0) / params.coupling
        closed = h_expectation_fock(params.with_coupling(1.0), electronic, 2, 10.0)
        assert contraction == pytest.approx(closed, rel=1e-6)

    def test_sideband_other_than_carrier_raises(self):
        with pytest.raises(WrongSideband) as exc_info:
            h_expectation_fock(ModelParams(sideband_order=2), ElectronicAmplitudes.ground(), 0, 1.0)
        assert exc_info.value.actual == 2


class TestEnergyIdentity:

    def test_zero_detuning_raises(self):
        with pytest.raises(ZeroDetuning):
            h_from_sigma22(ModelParams(detuning=0.0), 0.4, 0.5)

    def test_identity_at_finite_coupling(self):
        """ħΔω[σ₂₂(t) − σ₂₂(0)] = ⟨Ĥ⟩(t) − ⟨Ĥ⟩(0) con el estado evolucionado."""
        params = ModelParams(coupling_scale=0.7, laser_phase=0.2, fock_cutoff=30)
        electronic = ElectronicAmplitudes(0.6, 0.8j)
        motional = Coherent(1.1)
        state = product_state(electronic, motional, 30)
        baseline = sigma22_exact(params, electronic, motional, 0.0)
        for t in (1.0, 6.5, 20.0):
            lhs = h_from_sigma22(params, sigma22_exact(params, electronic, motional, t), baseline)
            rhs = heisenberg_energy(params, state, t) - heisenberg_energy(params, state, 0.0)
            assert lhs == pytest.approx(rhs, abs=1e-10)

    def test_energy_rate_matches_population_derivative(self):
        """ħΔω dσ₂₂/dt = ⟨∂ₜĤ⟩."""
        params = ModelParams(coupling_scale=0.5, fock_cutoff=30)
        electronic = ElectronicAmplitudes.phase_superposition()
        state = product_state(electronic, Coherent(1.0), 30)
        h = 1e-5
        derivative = (
            sigma22_exact(params, electronic, Coherent(1.0), 5.0 + h)
            - sigma22_exact(params, electronic, Coherent(1.0), 5.0 - h)
        ) / (2 * h)
        assert energy_rate(params, state, 5.0) == pytest.approx(params.detuning * derivative, rel=1e-6, abs=1e-9)


class TestCommutator:

    @pytest.mark.parametrize("k", [0, 2])
    def test_vanishes_at_start_and_full_period(self, k):
        params = ModelParams(sideband_order=k, fock_cutoff=67)
        assert commutator_expectation(params, ALPHA0, 0.0) == 0.0
        assert commutator_expectation(params, ALPHA0, 2 * math.pi / 0.2) == pytest.approx(0.0, abs=1e-14)

    @pytest.mark.parametrize("k", [0, 2])
    def test_matches_weighted_reexpression(self, k):
        """Σ f_k² |α0|^{2(n+k)} e^{−|α0|²}/n! = Σ w_n² P_{n+k}."""
        params = ModelParams(sideband_order=k, fock_cutoff=67)
        weights = number_statistics(Coherent(ALPHA0), 67)
        for t in np.linspace(1.0, 31.0, 7):
            closed = commutator_expectation(params, ALPHA0, float(t))
            weighted = commutator_expectation_weighted(params, weights, float(t))
            assert closed == pytest.approx(weighted, rel=1e-12, abs=1e-15)

    def test_sideband_shapes_share_time_dependence(self):
        """k=2 y k=0 comparten el factor (1 − cos Δωt): el cociente es constante."""
        carrier = ModelParams(sideband_order=0, fock_cutoff=67)
        second = ModelParams(sideband_order=2, fock_cutoff=67)
        ratios = [
            commutator_expectation(second, ALPHA0, t) / commutator_expectation(carrier, ALPHA0, t)
            for t in (3.0, 11.0, 17.0, 29.0)
        ]
        np.testing.assert_allclose(ratios, ratios[0], rtol=1e-12)

    def test_vacuum_carrier_value(self):
        """|1, 0⟩ en la banda cero: (2|κ|²/Δω)(1 − cos Δωt) f_0(0)²."""
        params = ModelParams(fock_cutoff=30)
        expected = 2.0 / 0.2 * (1 - math.cos(2.0)) * math.exp(-0.04)
        assert commutator_expectation(params, 0.0, 10.0) == pytest.approx(expected, rel=1e-13)

    def test_insufficient_cutoff_raises(self):
        with pytest.raises(CutoffInsufficient):
            commutator_expectation(ModelParams(sideband_order=2, fock_cutoff=20), ALPHA0, 10.0)

    def test_zero_detuning_raises(self):
        with pytest.raises(ZeroDetuning):
            commutator_expectation(ModelParams(detuning=0.0, fock_cutoff=67), ALPHA0, 10.0)

    def test_small_coupling_rejects_non_halving_couplings(self):
        with pytest.raises(InvalidModelParameters):
            small_coupling_commutator(
                ModelParams(fock_cutoff=30), ElectronicAmplitudes.ground(), Fock(0), 10.0, (0.04, 0.03, 0.01)
            )

    def test_small_coupling_limit_for_vacuum(self):
        params = ModelParams(fock_cutoff=30)
        extrapolated = small_coupling_commutator(params, ElectronicAmplitudes.ground(), Fock(0), 10.0)
        assert extrapolated == pytest.approx(commutator_expectation(params, 0.0, 10.0), rel=1e-3)

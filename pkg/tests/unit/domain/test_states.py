"""
UNIT TESTS - Estados de entrada

Regla de corte de Fock, estadística de número y descomposición de
mezclas en componentes puros.
"""
import math

import numpy as np
import pytest

from src.domain.vibronic.exceptions import CutoffInsufficient, InvalidStateError
from src.domain.vibronic.states import (
    coherent_amplitudes,
    coherent_cutoff,
    number_statistics,
    poisson_tail,
    poisson_weights,
    product_state,
    pure_components,
    suggested_cutoff,
)
from src.domain.vibronic.value_objects import Coherent, ElectronicAmplitudes, Fock, NumberDistribution

pytestmark = pytest.mark.unit

ALPHA0 = math.sqrt(12.0)


class TestCutoffRule:

    def test_coherent_cutoff_for_reference_amplitude(self):
        """|α0|² = 12 → ceil(12 + 10√12 + 20) = 67."""
        assert coherent_cutoff(ALPHA0) == 67

    def test_vacuum_cutoff(self):
        assert coherent_cutoff(0.0) == 30

    def test_suggested_cutoff_per_kind(self):
        assert suggested_cutoff(Coherent(ALPHA0), 2) == 67
        assert suggested_cutoff(Fock(4), 2) == 7
        assert suggested_cutoff(NumberDistribution((0.5, 0.5)), 0) == 1

    def test_rule_keeps_tail_below_limit(self):
        for mean in (0.5, 4.0, 12.0, 50.0):
            alpha0 = math.sqrt(mean)
            assert poisson_tail(alpha0, coherent_cutoff(alpha0)) < 1e-12


class TestNumberStatistics:

    def test_poisson_weights_sum_to_one_minus_tail(self):
        weights = poisson_weights(ALPHA0, 67)
        assert weights.sum() == pytest.approx(1.0 - poisson_tail(ALPHA0, 67), abs=1e-14)
        assert np.argmax(weights) in (11, 12)

    def test_insufficient_cutoff_raises(self):
        with pytest.raises(CutoffInsufficient) as exc_info:
            number_statistics(Coherent(ALPHA0), 20)
        assert exc_info.value.fock_cutoff == 20
        assert exc_info.value.tail_mass > 1e-12

    def test_fock_statistics(self):
        weights = number_statistics(Fock(3), 5)
        assert weights.tolist() == [0, 0, 0, 1, 0, 0]

    def test_fock_outside_basis_raises(self):
        with pytest.raises(InvalidStateError):
            number_statistics(Fock(6), 5)

    def test_distribution_is_padded(self):
        weights = number_statistics(NumberDistribution((0.5, 0.5)), 3)
        assert weights.tolist() == [0.5, 0.5, 0.0, 0.0]

    def test_distribution_longer_than_basis_raises(self):
        with pytest.raises(InvalidStateError):
            number_statistics(NumberDistribution((0.25, 0.25, 0.5)), 1)


class TestAmplitudes:

    def test_coherent_amplitudes_match_poisson(self):
        amplitudes = coherent_amplitudes(ALPHA0 * 1j, 67)
        np.testing.assert_allclose(np.abs(amplitudes) ** 2, poisson_weights(ALPHA0, 67), rtol=1e-12, atol=1e-300)

    def test_coherent_phase(self):
        """c_n ∝ α0^n: con α0 imaginario la fase de c_1 es π/2."""
        amplitudes = coherent_amplitudes(1j, 30)
        assert np.angle(amplitudes[1]) == pytest.approx(math.pi / 2)

    def test_product_state(self):
        state = product_state(ElectronicAmplitudes.phase_superposition(), Fock(2), 4)
        assert state.amplitudes[1, 2] == pytest.approx(1.0 / math.sqrt(2.0))
        assert state.amplitudes[0, 2] == pytest.approx(1j / math.sqrt(2.0))

    def test_pure_components_of_distribution(self):
        """Una mezcla diagonal se descompone en sus Fock con pesos P_n (se omiten los nulos)."""
        components = pure_components(ElectronicAmplitudes.ground(), NumberDistribution((0.25, 0.0, 0.75)), 2)
        assert [weight for weight, _ in components] == [0.25, 0.75]
        assert components[1][1].amplitudes[0, 2] == 1.0

    def test_pure_components_of_pure_state(self):
        components = pure_components(ElectronicAmplitudes.ground(), Coherent(1.0), 30)
        assert len(components) == 1
        assert components[0][0] == 1.0

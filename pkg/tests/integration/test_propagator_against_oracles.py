"""
INTEGRATION TESTS - Propagador exacto vs oráculos de fuerza bruta

La forma cerrada por bloques 2×2 se contrasta con la integración
adaptativa de la ecuación de Schrödinger sobre la matriz completa y con
el término de orden 2 de Dyson integrado por cuadratura.
"""
import math

import numpy as np
import pytest

from src.domain.vibronic.analytics import commutator_expectation, small_coupling_commutator
from src.domain.vibronic.exceptions import InvalidModelParameters
from src.domain.vibronic.oracle import dyson_term, integrate_schrodinger, integrate_trajectory
from src.domain.vibronic.propagator import evolve
from src.domain.vibronic.states import product_state
from src.domain.vibronic.value_objects import Coherent, ElectronicAmplitudes, Fock, ModelParams
from tests.conftest import ALPHA0
from tests.factories import ModelParamsFactory

pytestmark = pytest.mark.integration

TIMES = np.linspace(0.0, 30.0, 13)


class TestSchrodingerOracle:

    def test_random_parameters_match_closed_form(self, superposition):
        for params in ModelParamsFactory.build_batch(6):
            state0 = product_state(superposition, Fock(2), params.fock_cutoff)
            trajectory = integrate_trajectory(params, state0, TIMES)
            for t, numeric in zip(TIMES, trajectory):
                exact = evolve(params, state0, float(t))
                assert np.max(np.abs(numeric.amplitudes - exact.amplitudes)) < 1e-8
                assert abs(numeric.excited_population - exact.excited_population) < 1e-8

    def test_coherent_input_on_second_sideband(self, ground):
        params = ModelParams(sideband_order=2, coupling_scale=0.8, fock_cutoff=30)
        state0 = product_state(ground, Coherent(1.5), 30)
        numeric = integrate_schrodinger(params, state0, 17.0)
        exact = evolve(params, state0, 17.0)
        assert numeric.excited_population == pytest.approx(exact.excited_population, abs=1e-8)

    def test_time_zero_returns_initial_state(self, superposition):
        params = ModelParams(fock_cutoff=6)
        state0 = product_state(superposition, Fock(1), 6)
        assert integrate_schrodinger(params, state0, 0.0) is state0

    def test_tolerance_outside_range_raises(self, superposition):
        params = ModelParams(fock_cutoff=6)
        state0 = product_state(superposition, Fock(1), 6)
        with pytest.raises(InvalidModelParameters):
            integrate_schrodinger(params, state0, 1.0, tol=1e-3)

    def test_decreasing_times_raise(self, superposition):
        params = ModelParams(fock_cutoff=6)
        state0 = product_state(superposition, Fock(1), 6)
        with pytest.raises(InvalidModelParameters):
            integrate_trajectory(params, state0, [2.0, 1.0])


class TestDysonOracle:

    @pytest.mark.parametrize("k", [0, 2])
    def test_second_order_matches_commutator(self, ground, k):
        params = ModelParams(sideband_order=k, fock_cutoff=67)
        state0 = product_state(ground, Coherent(ALPHA0), 67)
        for t in (5.0, 12.0, 25.0):
            quadrature = dyson_term(params, 2, state0, t)
            assert abs(quadrature.imag) < 1e-12
            assert quadrature.real == pytest.approx(commutator_expectation(params, ALPHA0, t), rel=1e-6)

    def test_first_order_is_plain_expectation(self, superposition):
        params = ModelParams(fock_cutoff=4)
        state0 = product_state(superposition, Fock(0), 4)
        assert dyson_term(params, 1, state0, 10.0).real == pytest.approx(math.exp(-0.02) * math.sin(2.0))

    def test_second_order_vanishes_at_zero(self, ground):
        params = ModelParams(fock_cutoff=4)
        assert dyson_term(params, 2, product_state(ground, Fock(0), 4), 0.0) == 0j

    def test_unsupported_order_raises(self, ground):
        params = ModelParams(fock_cutoff=4)
        with pytest.raises(InvalidModelParameters):
            dyson_term(params, 3, product_state(ground, Fock(0), 4), 1.0)


@pytest.mark.slow
class TestSmallCouplingLimit:
    """Richardson sobre σ₂₂ a g ∈ {0.04, 0.02, 0.01} reproduce la forma cerrada."""

    @pytest.mark.parametrize("k", [0, 2])
    def test_matches_closed_form(self, ground, coherent_input, k):
        params = ModelParams(sideband_order=k, fock_cutoff=67)
        for t in np.linspace(5.0, 25.0, 10):
            extrapolated = small_coupling_commutator(params, ground, coherent_input, float(t))
            assert extrapolated == pytest.approx(commutator_expectation(params, ALPHA0, float(t)), rel=1e-3)

    def test_electronic_ground_is_required_for_the_match(self):
        """Con coherencia inicial aparece un término lineal en g y el límite diverge."""
        params = ModelParams(fock_cutoff=30)
        extrapolated = small_coupling_commutator(
            params, ElectronicAmplitudes(0.6, 0.8), Fock(0), 4.0
        )
        assert abs(extrapolated) > 5 * abs(commutator_expectation(params, 0.0, 4.0))


@pytest.mark.slow
class TestOracleSweeps:
    """Barridos amplios: 20 juegos aleatorios × 100 tiempos y Dyson en 20 tiempos."""

    def test_random_parameters_over_long_times(self, superposition):
        times = np.linspace(0.0, 50.0, 100)
        for params in ModelParamsFactory.build_batch(20):
            state0 = product_state(superposition, Fock(2), params.fock_cutoff)
            trajectory = integrate_trajectory(params, state0, times)
            for t, numeric in zip(times, trajectory):
                exact = evolve(params, state0, float(t))
                assert np.max(np.abs(numeric.amplitudes - exact.amplitudes)) < 1e-8

    @pytest.mark.parametrize("k", [0, 2])
    def test_second_order_on_time_grid(self, ground, k):
        """Δωt ≤ 5.6: lejos del cero de 1 − cos en 2π."""
        params = ModelParams(sideband_order=k, fock_cutoff=67)
        state0 = product_state(ground, Coherent(ALPHA0), 67)
        for t in np.linspace(1.0, 28.0, 20):
            quadrature = dyson_term(params, 2, state0, float(t))
            assert quadrature.real == pytest.approx(commutator_expectation(params, ALPHA0, float(t)), rel=1e-6)

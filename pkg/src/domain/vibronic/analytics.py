"""
Expresiones cerradas de referencia (energías en unidades de ħκ′).

Las usan los tests como verdad de referencia y las figuras como curvas
teóricas superpuestas a los datos generados.
"""
import cmath
import logging
import math

import numpy as np
from scipy.special import gammaln

from src.domain.vibronic.exceptions import (
    CutoffInsufficient,
    InvalidModelParameters,
    WrongSideband,
    ZeroDetuning,
)
from src.domain.vibronic.hamiltonian import (
    energy_derivative_expectation,
    energy_expectation,
)
from src.domain.vibronic.propagator import evolve, sigma22_exact
from src.domain.vibronic.special_functions import mode_function, mode_function_table, rabi_weight_table
from src.domain.vibronic.states import POISSON_TAIL_LIMIT, poisson_tail
from src.domain.vibronic.value_objects import (
    ElectronicAmplitudes,
    ModelParams,
    MotionalSpec,
    VibronicState,
)

logger = logging.getLogger(__name__)

RICHARDSON_COUPLINGS = (0.04, 0.02, 0.01)


def _require_carrier(params: ModelParams) -> None:
    if params.sideband_order != 0:
        raise WrongSideband(required=0, actual=params.sideband_order)


def _require_detuning(params: ModelParams) -> None:
    if params.detuning == 0.0:
        raise ZeroDetuning()


def _carrier_energy(params: ModelParams, electronic: ElectronicAmplitudes, f0: float, t: float) -> float:
    """|κ| f (γ1γ2* e^{iθ} e^{−iΔωt} + c.c.)."""
    rotated = electronic.coherence * cmath.exp(1j * (params.laser_phase - params.detuning * t))
    return 2.0 * params.coupling * f0 * rotated.real


def _one_minus_cos(x: float) -> float:
    """1 − cos x escrito como 2 sin²(x/2), sin cancelación cerca de 0."""
    return 2.0 * math.sin(x / 2.0) ** 2


# ─────────────────────────────────────────────────────────────
# ⟨Ĥ⟩ EN LA BANDA CERO
# ─────────────────────────────────────────────────────────────
def h_expectation_t0(params: ModelParams, electronic: ElectronicAmplitudes, n: int) -> float:
    """⟨Ĥ(0)⟩ = |κ| f_0(n;η)(γ1γ2* + γ2γ1*) para |n⟩ (θ = 0)."""
    _require_carrier(params)
    return _carrier_energy(params, electronic, mode_function(params, n), 0.0)


def h_expectation_fock(params: ModelParams, electronic: ElectronicAmplitudes, n: int, t: float) -> float:
    """
    ⟨Ĥ(t)⟩ = |κ| f_0(n;η)(γ1γ2* e^{−iΔωt} + c.c.).
    Con la superposición de fase π/2 queda |κ| f_0(n;η) sin(Δωt).
    """
    _require_carrier(params)
    return _carrier_energy(params, electronic, mode_function(params, n), t)


def h_expectation_general(
    params: ModelParams, electronic: ElectronicAmplitudes, probabilities, t: float
) -> float:
    """Promedio de h_expectation_fock pesado por la estadística de número P_n."""
    _require_carrier(params)
    weights = np.asarray(probabilities, dtype=float)
    f0 = mode_function_table(params, weights.size - 1)
    return _carrier_energy(params, electronic, float(np.dot(weights, f0)), t)


def h_from_sigma22(params: ModelParams, sigma22_t: float, sigma22_0: float) -> float:
    """ħΔω[σ₂₂(t) − σ₂₂(0)]; vacía con Δω = 0."""
    _require_detuning(params)
    return params.detuning * (sigma22_t - sigma22_0)


def heisenberg_energy(
    params: ModelParams, state0: VibronicState, t: float, *, coupling_scale: float | None = None
) -> float:
    """⟨Û†(t)Ĥ(t)Û(t)⟩ contrayendo el vector de estado evolucionado."""
    evolved = evolve(params, state0, t, coupling_scale=coupling_scale)
    return energy_expectation(params, evolved, t, coupling_scale=coupling_scale)


def energy_rate(
    params: ModelParams, state0: VibronicState, t: float, *, coupling_scale: float | None = None
) -> float:
    """⟨∂ₜĤ⟩ en el estado evolucionado; coincide con ħΔω dσ₂₂/dt."""
    evolved = evolve(params, state0, t, coupling_scale=coupling_scale)
    return energy_derivative_expectation(params, evolved, t, coupling_scale=coupling_scale)


# ─────────────────────────────────────────────────────────────
# CONMUTADOR PARCIALMENTE INTEGRADO
# ─────────────────────────────────────────────────────────────
def _shifted_poisson(alpha0: complex, sideband_order: int, pairs: int) -> np.ndarray:
    """|α0|^{2(n+k)} e^{−|α0|²}/n! para n = 0..pairs−1."""
    mean = abs(alpha0) ** 2
    ns = np.arange(pairs)
    if mean == 0.0:
        return ((ns + sideband_order) == 0).astype(float)
    return np.exp((ns + sideband_order) * math.log(mean) - mean - gammaln(ns + 1))


def commutator_expectation(params: ModelParams, alpha0: complex, t: float) -> float:
    """
    Valor cerrado para la entrada |1, α0⟩:
        (2|κ|²/Δω)(1 − cos Δωt) Σ_n f_k(n;η)² |α0|^{2(n+k)} e^{−|α0|²}/n!
    La suma llega hasta n + k = N_max, la misma base que el propagador.
    """
    _require_detuning(params)
    tail = poisson_tail(alpha0, params.fock_cutoff)
    if tail > POISSON_TAIL_LIMIT:
        raise CutoffInsufficient(params.fock_cutoff, tail, POISSON_TAIL_LIMIT)
    k = params.sideband_order
    pairs = max(params.fock_cutoff - k + 1, 0)
    f = mode_function_table(params)[:pairs]
    total = float(np.dot(f * f, _shifted_poisson(alpha0, k, pairs)))
    prefactor = 2.0 * params.coupling ** 2 / params.detuning
    return prefactor * _one_minus_cos(params.detuning * t) * total


def commutator_expectation_weighted(params: ModelParams, probabilities, t: float) -> float:
    """
    (2|κ|²/Δω)(1 − cos Δωt) Σ_n w_n² P_{n+k} para entrada electrónica |1⟩ y
    cualquier estadística de número P (misma base truncada).
    """
    _require_detuning(params)
    k = params.sideband_order
    weights = np.asarray(probabilities, dtype=float)
    pairs = max(weights.size - k, 0)
    w = rabi_weight_table(params, max(pairs - 1, 0))[:pairs]
    total = float(np.dot(w * w, weights[k:k + pairs]))
    prefactor = 2.0 * params.coupling ** 2 / params.detuning
    return prefactor * _one_minus_cos(params.detuning * t) * total


def small_coupling_commutator(
    params: ModelParams,
    electronic: ElectronicAmplitudes,
    motional: MotionalSpec,
    t: float,
    couplings: tuple[float, float, float] = RICHARDSON_COUPLINGS,
) -> float:
    """
    Límite g → 0 de ħΔω[σ₂₂(t) − σ₂₂(0)]/g², extrapolado por Richardson en
    dos pasos (elimina g² y g⁴). Las tres g deben reducirse a la mitad en cada paso.
    Se expresa a |κ| = κ′.
    """
    _require_detuning(params)
    g0, g1, g2 = couplings
    if not (g0 > 0 and math.isclose(g0, 2 * g1) and math.isclose(g1, 2 * g2)):
        raise InvalidModelParameters("couplings", couplings, "deben ser positivas y reducirse a la mitad")

    baseline = sigma22_exact(params, electronic, motional, 0.0)
    scaled = [
        params.detuning
        * (sigma22_exact(params, electronic, motional, t, coupling_scale=g) - baseline)
        / (g * g)
        for g in couplings
    ]
    first = [(4.0 * scaled[i + 1] - scaled[i]) / 3.0 for i in range(2)]
    extrapolated = (16.0 * first[1] - first[0]) / 15.0
    logger.debug(f"[Analytics] Richardson en t={t:.6g}: {scaled} → {extrapolated:.12g}")
    return extrapolated

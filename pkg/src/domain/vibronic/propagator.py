"""
Propagador exacto en forma cerrada.

Û(t) es diagonal por bloques: cada par (|2, n⟩, |1, n+k⟩) evoluciona con

    ( a_n            b_n e^{iθ} )
    ( −b_n* e^{−iθ}  a_n*       )

    a_n = e^{−iΔωt/2}[cos Γ_n t + i(Δω/2Γ_n) sin Γ_n t]
    b_n = e^{−iΔωt/2}(|κ| w_n/(iΓ_n)) sin Γ_n t
    Γ_n = √((Δω/2)² + w_n²|κ|²)

Los estados |1, q⟩ con q < k, y los |2, n⟩ cuyo compañero |1, n+k⟩ cae
fuera de la base truncada, son espectadores y no cambian.
"""
import cmath
import logging
import math

import numpy as np

from src.domain.vibronic.exceptions import InvalidModelParameters
from src.domain.vibronic.hamiltonian import check_basis, coupled_pairs, effective_coupling
from src.domain.vibronic.special_functions import rabi_weight, rabi_weight_table
from src.domain.vibronic.states import pure_components
from src.domain.vibronic.value_objects import (
    BlockCoefficients,
    ElectronicAmplitudes,
    ModelParams,
    MotionalSpec,
    VibronicState,
)

logger = logging.getLogger(__name__)

# Debajo de este |Γt| se usa la serie de sin(Γt)/Γ (esquina g = Δω = 0).
SINC_SERIES_THRESHOLD = 1e-6


def _check_time(t: float) -> None:
    if not t >= 0 or not math.isfinite(t):
        raise InvalidModelParameters("t", t, "debe ser finito y ≥ 0")


def _sin_over_gamma(gamma: np.ndarray, t: float) -> np.ndarray:
    """sin(Γt)/Γ, con la serie t(1 − (Γt)²/6) cerca de Γt = 0."""
    gt = gamma * t
    small = np.abs(gt) < SINC_SERIES_THRESHOLD
    safe_gamma = np.where(small, 1.0, gamma)
    return np.where(small, t * (1.0 - gt * gt / 6.0), np.sin(gt) / safe_gamma)


def _block_arrays(
    params: ModelParams, weights: np.ndarray, t: float, kappa: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    half_detuning = params.detuning / 2.0
    gamma = np.sqrt(half_detuning ** 2 + (weights * kappa) ** 2)
    sinc = _sin_over_gamma(gamma, t)
    phase = cmath.exp(-1j * half_detuning * t)
    a = phase * (np.cos(gamma * t) + 1j * half_detuning * sinc)
    b = phase * (-1j * kappa * weights * sinc)
    return a, b, gamma


# ─────────────────────────────────────────────────────────────
# OPERACIONES
# ─────────────────────────────────────────────────────────────
def block_coeffs(
    params: ModelParams, n: int, t: float, *, coupling_scale: float | None = None
) -> BlockCoefficients:
    """Coeficientes exactos del bloque n en el tiempo t (unidades de 1/κ′)."""
    if not 0 <= n <= params.fock_cutoff:
        raise InvalidModelParameters("n", n, f"debe estar en 0..{params.fock_cutoff}")
    _check_time(t)
    w = rabi_weight(params, n)
    a, b, gamma = _block_arrays(
        params, np.array([w]), t, effective_coupling(params, coupling_scale)
    )
    return BlockCoefficients(n=n, a_n=complex(a[0]), b_n=complex(b[0]), gamma_n=float(gamma[0]), w_n=w)


def evolve(
    params: ModelParams, state0: VibronicState, t: float, *, coupling_scale: float | None = None
) -> VibronicState:
    """Aplica Û(t) en forma cerrada; la norma se conserva."""
    check_basis(params, state0)
    _check_time(t)
    pairs = coupled_pairs(params)
    amplitudes = np.array(state0.amplitudes, dtype=complex)
    if pairs == 0:
        return VibronicState(amplitudes)

    k = params.sideband_order
    weights = rabi_weight_table(params)[:pairs]
    a, b, _ = _block_arrays(params, weights, t, effective_coupling(params, coupling_scale))
    coupling_phase = cmath.exp(1j * params.laser_phase)

    excited = amplitudes[1, :pairs].copy()
    ground = amplitudes[0, k:k + pairs].copy()
    amplitudes[1, :pairs] = a * excited + b * coupling_phase * ground
    amplitudes[0, k:k + pairs] = -b.conj() * coupling_phase.conjugate() * excited + a.conj() * ground
    return VibronicState(amplitudes)


def sigma22_exact(
    params: ModelParams,
    electronic: ElectronicAmplitudes,
    motional: MotionalSpec,
    t: float,
    *,
    coupling_scale: float | None = None,
) -> float:
    """σ₂₂(t) tras la evolución exacta; una mezcla de Fock se promedia por pesos."""
    components = pure_components(electronic, motional, params.fock_cutoff)
    return _mixture_population(params, components, t, coupling_scale)


def _mixture_population(
    params: ModelParams,
    components: list[tuple[float, VibronicState]],
    t: float,
    coupling_scale: float | None,
) -> float:
    population = math.fsum(
        weight * evolve(params, state, t, coupling_scale=coupling_scale).excited_population
        for weight, state in components
    )
    return min(max(population, 0.0), 1.0)


def sigma22_series(
    params: ModelParams,
    electronic: ElectronicAmplitudes,
    motional: MotionalSpec,
    t: float,
    g_grid,
) -> np.ndarray:
    """σ₂₂(t) punto a punto sobre la malla de acoplamientos g."""
    components = pure_components(electronic, motional, params.fock_cutoff)
    grid = np.asarray(g_grid, dtype=float)
    logger.debug(f"[Propagator] σ22 en t={t:.6g} sobre {grid.size} valores de g")
    return np.array(
        [_mixture_population(params, components, t, float(g)) for g in grid.ravel()]
    ).reshape(grid.shape)

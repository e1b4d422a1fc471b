"""
Oráculos de fuerza bruta, independientes de la forma cerrada.

- integrate_schrodinger / integrate_trajectory: integran i∂ₜ|ψ⟩ = Ĥ(t)|ψ⟩
  con un par embebido adaptativo (DOP853). La integración paso a paso
  respeta el orden temporal por construcción.
- dyson_term: términos de orden 1 y 2 de la expansión del valor esperado
  de Ĥ(t). El de orden 2 es i∫₀ᵗ dτ ⟨[Ĥ(τ), Ĥ(t)]⟩, integrado con
  cuadratura adaptativa sobre elementos de matriz precalculados.
"""
import cmath
import logging
import math

import numpy as np
from scipy.integrate import quad, solve_ivp

from src.domain.vibronic.exceptions import (
    InvalidModelParameters,
    QuadratureNotConverged,
    StepSizeUnderflow,
)
from src.domain.vibronic.hamiltonian import check_basis, energy_expectation, interaction_matrices
from src.domain.vibronic.value_objects import STATE_NORM_TOLERANCE, ModelParams, VibronicState

logger = logging.getLogger(__name__)

MIN_TOLERANCE = 1e-13
MAX_TOLERANCE = 1e-6
DEFAULT_TOLERANCE = 1e-12
QUADRATURE_SUBINTERVALS = 200


def _check_tolerance(tol: float) -> None:
    if not MIN_TOLERANCE <= tol <= MAX_TOLERANCE:
        raise InvalidModelParameters("tol", tol, f"debe estar en [{MIN_TOLERANCE:.0e}, {MAX_TOLERANCE:.0e}]")


def _schrodinger_rhs(params: ModelParams, coupling_scale: float | None):
    v, v_dag = interaction_matrices(params, coupling_scale=coupling_scale)
    detuning = params.detuning

    def rhs(t: float, psi: np.ndarray) -> np.ndarray:
        phase = cmath.exp(-1j * detuning * t)
        return -1j * (phase * (v @ psi) + phase.conjugate() * (v_dag @ psi))

    return rhs


def _to_state(vector: np.ndarray, reference_norm: float, tol: float, time: float) -> VibronicState:
    norm = float(np.linalg.norm(vector))
    drift = abs(norm - reference_norm)
    logger.debug(f"[Oracle] t={time:.6g}, deriva de norma={drift:.3e}")
    if drift > 10 * tol:
        logger.warning(f"[Oracle] Deriva de norma {drift:.3e} > 10·tol en t={time:.6g}")
    if abs(norm ** 2 - 1.0) > STATE_NORM_TOLERANCE:
        vector = vector * (reference_norm / norm)
    return VibronicState.from_flat(vector)


# ─────────────────────────────────────────────────────────────
# ECUACIÓN DE SCHRÖDINGER
# ─────────────────────────────────────────────────────────────
def integrate_trajectory(
    params: ModelParams,
    state0: VibronicState,
    times,
    tol: float = DEFAULT_TOLERANCE,
    *,
    coupling_scale: float | None = None,
) -> list[VibronicState]:
    """Una sola integración adaptativa que reporta el estado en cada tiempo pedido."""
    check_basis(params, state0)
    _check_tolerance(tol)
    grid = np.asarray(times, dtype=float)
    if grid.ndim != 1 or grid.size == 0 or np.any(grid < 0) or np.any(np.diff(grid) < 0):
        raise InvalidModelParameters("times", times, "deben ser no negativos y crecientes")

    t_final = float(grid[-1])
    if t_final == 0.0:
        return [state0 for _ in grid]

    psi0 = state0.flat()
    result = solve_ivp(
        _schrodinger_rhs(params, coupling_scale),
        (0.0, t_final),
        psi0,
        method="DOP853",
        t_eval=grid,
        rtol=tol,
        atol=tol,
    )
    if result.status == -1:
        reached = float(result.t[-1]) if result.t.size else 0.0
        raise StepSizeUnderflow(reached, result.message)

    logger.debug(f"[Oracle] DOP853: {result.nfev} evaluaciones hasta t={t_final:.6g}")
    reference = state0.norm
    return [_to_state(result.y[:, i], reference, tol, float(result.t[i])) for i in range(grid.size)]


def integrate_schrodinger(
    params: ModelParams,
    state0: VibronicState,
    t: float,
    tol: float = DEFAULT_TOLERANCE,
    *,
    coupling_scale: float | None = None,
) -> VibronicState:
    """Estado en t por integración numérica de la ecuación de Schrödinger."""
    return integrate_trajectory(params, state0, [t], tol, coupling_scale=coupling_scale)[0]


# ─────────────────────────────────────────────────────────────
# TÉRMINOS DE DYSON
# ─────────────────────────────────────────────────────────────
def dyson_term(
    params: ModelParams,
    order: int,
    state0: VibronicState,
    t: float,
    quadrature_tol: float = 1e-10,
    *,
    coupling_scale: float | None = None,
) -> complex:
    """
    order=1: ⟨ψ₀|Ĥ(t)|ψ₀⟩ sin evolución.
    order=2: i∫₀ᵗ dτ ⟨ψ₀|[Ĥ(τ), Ĥ(t)]|ψ₀⟩, el conmutador a tiempos distintos
             parcialmente integrado (real porque el conmutador es antihermítico).
    """
    check_basis(params, state0)
    if order == 1:
        return complex(energy_expectation(params, state0, t, coupling_scale=coupling_scale))
    if order != 2:
        raise InvalidModelParameters("order", order, "solo se implementan los órdenes 1 y 2")
    if t < 0:
        raise InvalidModelParameters("t", t, "debe ser ≥ 0")
    if t == 0:
        return 0j

    # Con φ = Ĥ(t)ψ: ⟨[Ĥ(τ), Ĥ(t)]⟩ = e^{−iΔωτ} A + e^{iΔωτ} B
    v, v_dag = interaction_matrices(params, coupling_scale=coupling_scale)
    psi = state0.flat()
    phase_t = cmath.exp(-1j * params.detuning * t)
    phi = phase_t * (v @ psi) + phase_t.conjugate() * (v_dag @ psi)
    a = np.vdot(psi, v @ phi) - np.vdot(phi, v @ psi)
    b = np.vdot(psi, v_dag @ phi) - np.vdot(phi, v_dag @ psi)
    detuning = params.detuning

    def integrand(tau: float) -> float:
        phase = cmath.exp(-1j * detuning * tau)
        return (1j * (phase * a + phase.conjugate() * b)).real

    result = quad(
        integrand,
        0.0,
        t,
        epsabs=quadrature_tol,
        epsrel=quadrature_tol,
        limit=QUADRATURE_SUBINTERVALS,
        full_output=1,
    )
    value, error_estimate = result[0], result[1]
    if len(result) > 3 or error_estimate > max(quadrature_tol, quadrature_tol * abs(value)):
        raise QuadratureNotConverged(value, error_estimate, quadrature_tol)
    if not math.isfinite(value):
        raise QuadratureNotConverged(value, error_estimate, quadrature_tol)
    logger.debug(f"[Oracle] Dyson orden 2 en t={t:.6g}: {value:.12g} (error {error_estimate:.2e})")
    return complex(value)

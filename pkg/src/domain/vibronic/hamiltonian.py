"""
Hamiltoniano de interacción en la imagen de interacción, base truncada.

    Ĥ(t) = e^{−iΔωt} V̂ + e^{iΔωt} V̂†,
    ⟨2, n| V̂ |1, n+k⟩ = |κ| e^{iθ} w_n     (n + k ≤ N_max)

La dependencia temporal entra solo por fases escalares, así que las
expectativas se arman con ⟨V̂⟩ y nunca hace falta la matriz completa.
La matriz explícita existe para el oráculo y para los tests.
"""
import cmath

import numpy as np
from scipy import sparse

from src.domain.vibronic.exceptions import InvalidStateError
from src.domain.vibronic.special_functions import rabi_weight_table
from src.domain.vibronic.value_objects import ModelParams, VibronicState


def effective_coupling(params: ModelParams, coupling_scale: float | None = None) -> float:
    """|κ| = g·κ′; `coupling_scale` permite g negativo en los tests de paridad."""
    g = params.coupling_scale if coupling_scale is None else coupling_scale
    return g * params.base_coupling


def coupled_pairs(params: ModelParams) -> int:
    """Cantidad de bloques (|2, n⟩, |1, n+k⟩) con ambos miembros en la base."""
    return max(params.fock_cutoff - params.sideband_order + 1, 0)


def check_basis(params: ModelParams, state: VibronicState) -> None:
    if state.fock_cutoff != params.fock_cutoff:
        raise InvalidStateError(
            f"El estado usa N_max={state.fock_cutoff} y el modelo N_max={params.fock_cutoff}."
        )


# ─────────────────────────────────────────────────────────────
# MATRICES
# ─────────────────────────────────────────────────────────────
def interaction_matrices(
    params: ModelParams, *, coupling_scale: float | None = None
) -> tuple[sparse.csr_array, sparse.csr_array]:
    """(V̂, V̂†) dispersas sobre el índice plano e_fila·(N_max+1) + n."""
    size = params.fock_cutoff + 1
    pairs = coupled_pairs(params)
    k = params.sideband_order
    kappa = effective_coupling(params, coupling_scale)
    ns = np.arange(pairs)
    values = kappa * cmath.exp(1j * params.laser_phase) * rabi_weight_table(params)[:pairs]
    v = sparse.csr_array(
        (values.astype(complex), (size + ns, ns + k)),
        shape=(2 * size, 2 * size),
    )
    return v, v.conj().T.tocsr()


def hamiltonian_matrix(
    params: ModelParams, t: float, *, coupling_scale: float | None = None
) -> np.ndarray:
    """Ĥ(t) densa y hermítica."""
    v, v_dag = interaction_matrices(params, coupling_scale=coupling_scale)
    phase = cmath.exp(-1j * params.detuning * t)
    return (phase * v + phase.conjugate() * v_dag).toarray()


# ─────────────────────────────────────────────────────────────
# EXPECTATIVAS
# ─────────────────────────────────────────────────────────────
def coupling_overlap(
    params: ModelParams, state: VibronicState, *, coupling_scale: float | None = None
) -> complex:
    """⟨ψ|V̂|ψ⟩ = |κ| e^{iθ} Σ_n w_n c₂(n)* c₁(n+k)."""
    check_basis(params, state)
    pairs = coupled_pairs(params)
    if pairs == 0:
        return 0j
    k = params.sideband_order
    weights = rabi_weight_table(params)[:pairs]
    excited = state.amplitudes[1, :pairs]
    ground = state.amplitudes[0, k:k + pairs]
    kappa = effective_coupling(params, coupling_scale)
    return kappa * cmath.exp(1j * params.laser_phase) * complex(np.sum(excited.conj() * weights * ground))


def energy_expectation(
    params: ModelParams, state: VibronicState, t: float, *, coupling_scale: float | None = None
) -> float:
    """⟨ψ|Ĥ(t)|ψ⟩ = 2 Re(e^{−iΔωt}⟨V̂⟩)."""
    overlap = coupling_overlap(params, state, coupling_scale=coupling_scale)
    return 2.0 * (cmath.exp(-1j * params.detuning * t) * overlap).real


def energy_derivative_expectation(
    params: ModelParams, state: VibronicState, t: float, *, coupling_scale: float | None = None
) -> float:
    """⟨ψ|∂ₜĤ(t)|ψ⟩ = 2Δω Im(e^{−iΔωt}⟨V̂⟩)."""
    overlap = coupling_overlap(params, state, coupling_scale=coupling_scale)
    return 2.0 * params.detuning * (cmath.exp(-1j * params.detuning * t) * overlap).imag

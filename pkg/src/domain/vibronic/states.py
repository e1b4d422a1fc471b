"""
Constructores de estados de entrada y estadística de número.

La distribución de Poisson se trunca en N_max SIN renormalizar: la masa
perdida se controla con la regla de corte y se rechaza si supera 1e−12.
"""
import logging
import math

import numpy as np
from scipy.special import gammaln
from scipy.stats import poisson

from src.domain.vibronic.exceptions import CutoffInsufficient, InvalidStateError
from src.domain.vibronic.value_objects import (
    Coherent,
    ElectronicAmplitudes,
    Fock,
    MotionalSpec,
    NumberDistribution,
    VibronicState,
)

logger = logging.getLogger(__name__)

POISSON_TAIL_LIMIT = 1e-12


# ─────────────────────────────────────────────────────────────
# CORTE DE FOCK
# ─────────────────────────────────────────────────────────────
def coherent_cutoff(alpha0: complex) -> int:
    """N_max = ceil(|α0|² + 10·√max(|α0|², 1) + 20)."""
    mean = abs(alpha0) ** 2
    return math.ceil(mean + 10.0 * math.sqrt(max(mean, 1.0)) + 20.0)


def suggested_cutoff(motional: MotionalSpec, sideband_order: int = 0) -> int:
    """
    Corte mínimo razonable para un estado de movimiento:
      - Coherent: la regla de cola de Poisson.
      - Fock n: n + k + 1 (el compañero |1, n+k⟩ queda dentro de la base).
      - NumberDistribution: len(P) − 1.
    """
    match motional:
        case Coherent(alpha0=alpha0):
            return coherent_cutoff(alpha0)
        case Fock(n=n):
            return n + sideband_order + 1
        case NumberDistribution():
            return motional.fock_cutoff
    raise InvalidStateError(f"Estado de movimiento no soportado: {motional!r}.")


def poisson_tail(alpha0: complex, fock_cutoff: int) -> float:
    """Masa de Poisson más allá de N_max, P(n > N_max)."""
    mean = abs(alpha0) ** 2
    if mean == 0.0:
        return 0.0
    return float(poisson.sf(fock_cutoff, mean))


def _check_coherent_cutoff(alpha0: complex, fock_cutoff: int) -> None:
    tail = poisson_tail(alpha0, fock_cutoff)
    if tail > POISSON_TAIL_LIMIT:
        raise CutoffInsufficient(fock_cutoff, tail, POISSON_TAIL_LIMIT)
    logger.debug(f"[States] |α0|²={abs(alpha0) ** 2:.6g}, N_max={fock_cutoff}, cola={tail:.3e}")


# ─────────────────────────────────────────────────────────────
# ESTADÍSTICA DE NÚMERO
# ─────────────────────────────────────────────────────────────
def poisson_weights(alpha0: complex, fock_cutoff: int) -> np.ndarray:
    """P_n = e^{−|α0|²}|α0|^{2n}/n! vía logaritmos (sin desbordes para n ≈ 100)."""
    mean = abs(alpha0) ** 2
    weights = np.zeros(fock_cutoff + 1)
    if mean == 0.0:
        weights[0] = 1.0
        return weights
    ns = np.arange(fock_cutoff + 1)
    return np.exp(ns * math.log(mean) - mean - gammaln(ns + 1))


def number_statistics(spec: MotionalSpec, fock_cutoff: int) -> np.ndarray:
    """Vector P_n, n = 0..N_max, del estado de movimiento."""
    match spec:
        case Fock(n=n):
            if n > fock_cutoff:
                raise InvalidStateError(f"Fock n={n} fuera de la base truncada 0..{fock_cutoff}.")
            weights = np.zeros(fock_cutoff + 1)
            weights[n] = 1.0
            return weights
        case Coherent(alpha0=alpha0):
            _check_coherent_cutoff(alpha0, fock_cutoff)
            return poisson_weights(alpha0, fock_cutoff)
        case NumberDistribution(probabilities=probabilities):
            if len(probabilities) > fock_cutoff + 1:
                raise InvalidStateError(
                    f"La distribución tiene {len(probabilities)} entradas; la base solo {fock_cutoff + 1}."
                )
            weights = np.zeros(fock_cutoff + 1)
            weights[: len(probabilities)] = probabilities
            return weights
    raise InvalidStateError(f"Estado de movimiento no soportado: {spec!r}.")


# ─────────────────────────────────────────────────────────────
# AMPLITUDES PURAS
# ─────────────────────────────────────────────────────────────
def coherent_amplitudes(alpha0: complex, fock_cutoff: int) -> np.ndarray:
    """c_n = e^{−|α0|²/2} α0^n/√n!, truncado en N_max."""
    _check_coherent_cutoff(alpha0, fock_cutoff)
    amplitudes = np.zeros(fock_cutoff + 1, dtype=complex)
    magnitude = abs(alpha0)
    if magnitude == 0.0:
        amplitudes[0] = 1.0
        return amplitudes
    ns = np.arange(fock_cutoff + 1)
    log_modulus = ns * math.log(magnitude) - magnitude ** 2 / 2.0 - gammaln(ns + 1) / 2.0
    return np.exp(log_modulus + 1j * ns * np.angle(alpha0))


def motional_amplitudes(spec: Fock | Coherent, fock_cutoff: int) -> np.ndarray:
    match spec:
        case Fock(n=n):
            if n > fock_cutoff:
                raise InvalidStateError(f"Fock n={n} fuera de la base truncada 0..{fock_cutoff}.")
            amplitudes = np.zeros(fock_cutoff + 1, dtype=complex)
            amplitudes[n] = 1.0
            return amplitudes
        case Coherent(alpha0=alpha0):
            return coherent_amplitudes(alpha0, fock_cutoff)
    raise InvalidStateError(f"Un estado mezcla no tiene amplitudes puras: {spec!r}.")


def product_state(
    electronic: ElectronicAmplitudes,
    motional: Fock | Coherent,
    fock_cutoff: int,
) -> VibronicState:
    """(γ1|1⟩ + γ2|2⟩) ⊗ |movimiento⟩ en la base truncada."""
    return VibronicState.product(electronic, motional_amplitudes(motional, fock_cutoff))


def pure_components(
    electronic: ElectronicAmplitudes,
    motional: MotionalSpec,
    fock_cutoff: int,
) -> list[tuple[float, VibronicState]]:
    """
    Descomposición en (peso, estado puro). Fock y Coherent dan un único
    componente; NumberDistribution es la mezcla incoherente de sus Fock.
    """
    if isinstance(motional, NumberDistribution):
        weights = number_statistics(motional, fock_cutoff)
        return [
            (float(p), product_state(electronic, Fock(n), fock_cutoff))
            for n, p in enumerate(weights)
            if p > 0.0
        ]
    return [(1.0, product_state(electronic, motional, fock_cutoff))]

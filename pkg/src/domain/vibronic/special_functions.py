"""
Funciones especiales del modelo: polinomios de Laguerre generalizados,
función de modo f_k(n;η) y pesos de Rabi w_n.

Todas son funciones puras; las versiones "_table" devuelven el vector
completo n = 0..N_max de una vez para los barridos del propagador.
"""
import math

import numpy as np

from src.domain.vibronic.exceptions import InvalidModelParameters
from src.domain.vibronic.value_objects import ModelParams

# cos(πk/2) y sin(πk/2) exactos por cuarto de vuelta: k impar da cero exacto.
_QUARTER_TURN_COS = (1.0, 0.0, -1.0, 0.0)
_QUARTER_TURN_SIN = (0.0, 1.0, 0.0, -1.0)


# ─────────────────────────────────────────────────────────────
# LAGUERRE
# ─────────────────────────────────────────────────────────────
def laguerre(n: int, k: int, x: float) -> float:
    """
    L_n^(k)(x) por la recurrencia de tres términos:
        L_0 = 1,  L_1 = 1 + k − x,
        (m+1) L_{m+1} = (2m + 1 + k − x) L_m − (m + k) L_{m−1}.
    """
    if n < 0 or k < 0:
        raise InvalidModelParameters("n" if n < 0 else "k", n if n < 0 else k, "debe ser ≥ 0")
    previous, current = 1.0, 1.0 + k - x
    if n == 0:
        return previous
    for m in range(1, n):
        previous, current = current, ((2 * m + 1 + k - x) * current - (m + k) * previous) / (m + 1)
    return current


def laguerre_table(n_max: int, k: int, x: float) -> np.ndarray:
    """Vector [L_0^(k)(x), …, L_{n_max}^(k)(x)] con la misma recurrencia."""
    table = np.empty(n_max + 1)
    table[0] = 1.0
    if n_max >= 1:
        table[1] = 1.0 + k - x
    for m in range(1, n_max):
        table[m + 1] = ((2 * m + 1 + k - x) * table[m] - (m + k) * table[m - 1]) / (m + 1)
    return table


# ─────────────────────────────────────────────────────────────
# COCIENTES FACTORIALES
# ─────────────────────────────────────────────────────────────
def factorial_ratio(n: int, k: int) -> float:
    """n!/(n+k)! como producto Π_{j=1..k} 1/(n+j); nunca factoriales completos."""
    ratio = 1.0
    for j in range(1, k + 1):
        ratio /= n + j
    return ratio


def factorial_ratio_table(n_max: int, k: int) -> np.ndarray:
    ns = np.arange(n_max + 1, dtype=float)
    ratio = np.ones(n_max + 1)
    for j in range(1, k + 1):
        ratio /= ns + j
    return ratio


def sideband_cosine(params: ModelParams) -> float:
    """cos(Δφ + πk/2), la combinación hermítica de (iη)^k y su conjugado."""
    quarter = params.sideband_order % 4
    phi = params.trap_position_phase
    return math.cos(phi) * _QUARTER_TURN_COS[quarter] - math.sin(phi) * _QUARTER_TURN_SIN[quarter]


def _prefactor(params: ModelParams) -> float:
    eta = params.lamb_dicke
    return sideband_cosine(params) * eta ** params.sideband_order * math.exp(-eta * eta / 2.0)


# ─────────────────────────────────────────────────────────────
# FUNCIÓN DE MODO Y PESOS DE RABI
# ─────────────────────────────────────────────────────────────
def mode_function(params: ModelParams, n: int) -> float:
    """f_k(n;η) = cos(Δφ + πk/2) η^k e^{−η²/2} [n!/(n+k)!] L_n^(k)(η²)."""
    k = params.sideband_order
    return _prefactor(params) * factorial_ratio(n, k) * laguerre(n, k, params.lamb_dicke ** 2)


def rabi_weight(params: ModelParams, n: int) -> float:
    """w_n = cos(Δφ + πk/2) η^k e^{−η²/2} √(n!/(n+k)!) L_n^(k)(η²)."""
    k = params.sideband_order
    return _prefactor(params) * math.sqrt(factorial_ratio(n, k)) * laguerre(n, k, params.lamb_dicke ** 2)


def mode_function_table(params: ModelParams, n_max: int | None = None) -> np.ndarray:
    n_max = params.fock_cutoff if n_max is None else n_max
    k = params.sideband_order
    return (
        _prefactor(params)
        * factorial_ratio_table(n_max, k)
        * laguerre_table(n_max, k, params.lamb_dicke ** 2)
    )


def rabi_weight_table(params: ModelParams, n_max: int | None = None) -> np.ndarray:
    """[w_0, …, w_{n_max}] (por defecto n_max = N_max)."""
    n_max = params.fock_cutoff if n_max is None else n_max
    k = params.sideband_order
    return (
        _prefactor(params)
        * np.sqrt(factorial_ratio_table(n_max, k))
        * laguerre_table(n_max, k, params.lamb_dicke ** 2)
    )

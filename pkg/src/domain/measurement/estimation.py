"""
Regresión polinomial con paridad fija en g y extracción de términos físicos.

    Protocolo Hamiltoniano:  p̂ − 1/2 = c₁g + c₃g³ + …   → ħΔω·c₁ = ⟨Ĥ(t)⟩
    Protocolo conmutador:    p̂       = c₂g² + c₄g⁴ + … → ħΔω·c₂ = i∫⟨[Ĥ(τ), Ĥ(t)]⟩dτ

Mínimos cuadrados LINEALES en los coeficientes, pesados por la varianza
binomial de cada punto. Ambos valores se expresan a |κ| = κ′ (g = 1).
"""
import logging
import math
from collections.abc import Sequence

import numpy as np

from src.domain.measurement.exceptions import DegenerateWeights, SingularDesign, WrongBasis
from src.domain.measurement.value_objects import (
    Estimate,
    FitBasis,
    FitResult,
    MeasurementRecord,
    Parity,
)
from src.domain.vibronic.exceptions import ZeroDetuning
from src.domain.vibronic.value_objects import ModelParams

logger = logging.getLogger(__name__)

MAX_CONDITION_NUMBER = 1e12
HAMILTONIAN_OFFSET = 0.5
COMMUTATOR_OFFSET = 0.0


def clamped_probability(p_hat: np.ndarray, shots: np.ndarray) -> np.ndarray:
    """p̃ = min(max(p̂, 1/(2·shots)), 1 − 1/(2·shots))."""
    floor = 1.0 / (2.0 * shots)
    return np.minimum(np.maximum(p_hat, floor), 1.0 - floor)


def weighted_least_squares(
    design: np.ndarray,
    target: np.ndarray,
    sqrt_weights: np.ndarray,
    *,
    max_condition_number: float = MAX_CONDITION_NUMBER,
) -> tuple[np.ndarray, np.ndarray, float]:
    """
    Resuelve min ‖√W (A c − y)‖ con columnas equilibradas.
    Devuelve (c, (AᵀWA)⁻¹, número de condición del diseño equilibrado).
    """
    weighted = design * sqrt_weights[:, None]
    column_norms = np.linalg.norm(weighted, axis=0)
    if np.any(column_norms == 0.0):
        raise SingularDesign("una columna del diseño es nula")
    equilibrated = weighted / column_norms

    _, singular_values, vt = np.linalg.svd(equilibrated, full_matrices=False)
    condition_number = float(singular_values[0] / singular_values[-1]) if singular_values[-1] > 0 else math.inf
    if not condition_number <= max_condition_number:
        raise SingularDesign("diseño mal condicionado", condition_number)

    scaled_solution, *_ = np.linalg.lstsq(equilibrated, target * sqrt_weights, rcond=None)
    scaled_covariance = (vt.T / singular_values ** 2) @ vt
    return (
        scaled_solution / column_norms,
        scaled_covariance / np.outer(column_norms, column_norms),
        condition_number,
    )


def fit_parity_polynomial(
    records: Sequence[MeasurementRecord],
    basis: FitBasis,
    offset: float,
    *,
    max_condition_number: float = MAX_CONDITION_NUMBER,
) -> FitResult:
    """
    Ajuste pesado de (p̂ − offset) sobre la base de paridad.

    Pesos shots/(p̃(1 − p̃)); covarianza (AᵀWA)⁻¹ de las ecuaciones normales
    pesadas; el RMS de residuos es sin pesar. Las columnas se equilibran
    antes de resolver y el número de condición reportado es el del diseño
    pesado y equilibrado.
    """
    g = np.array([r.g for r in records], dtype=float)
    distinct = np.unique(g).size
    if distinct < basis.size:
        raise SingularDesign(
            f"{distinct} valores distintos de g para {basis.size} coeficientes"
        )

    shots = np.array([r.shots for r in records], dtype=float)
    p_hat = np.array([r.p_hat for r in records], dtype=float)
    if np.all((p_hat == 0.0) | (p_hat == 1.0)):
        raise DegenerateWeights(len(records))

    p_tilde = clamped_probability(p_hat, shots)
    sqrt_weights = np.sqrt(shots / (p_tilde * (1.0 - p_tilde)))

    design = basis.design_matrix(g)
    target = p_hat - offset
    coefficients, covariance, condition_number = weighted_least_squares(
        design, target, sqrt_weights, max_condition_number=max_condition_number
    )

    residuals = target - design @ coefficients
    residual_rms = float(np.sqrt(np.mean(residuals ** 2)))

    logger.debug(
        f"[Estimation] base {basis.parity.value} hasta g^{basis.max_power}: "
        f"{len(records)} registros, cond={condition_number:.3e}, rms={residual_rms:.3e}"
    )
    return FitResult(
        basis=basis,
        offset=offset,
        coefficients=coefficients,
        covariance=covariance,
        residual_rms=residual_rms,
        condition_number=condition_number,
    )


def _extract(fit: FitResult, params: ModelParams, parity: Parity, offset: float, power: int) -> Estimate:
    if fit.basis.parity is not parity or not math.isclose(fit.offset, offset, abs_tol=1e-12):
        raise WrongBasis(
            required=f"{parity.value} (offset {offset:g})",
            actual=fit.basis.parity.value,
            offset=fit.offset,
        )
    if params.detuning == 0.0:
        raise ZeroDetuning()
    detuning = params.detuning
    return Estimate(
        value=detuning * fit.coefficient(power),
        stderr=abs(detuning) * fit.stderr(power),
    )


def extract_hamiltonian(fit: FitResult, params: ModelParams) -> Estimate:
    """⟨Ĥ(t)⟩ = ħΔω·c₁ a partir de un ajuste impar con offset 1/2."""
    return _extract(fit, params, Parity.ODD, HAMILTONIAN_OFFSET, 1)


def extract_commutator(fit: FitResult, params: ModelParams) -> Estimate:
    """i∫⟨[Ĥ(τ), Ĥ(t)]⟩dτ = ħΔω·c₂ a partir de un ajuste par con offset 0."""
    return _extract(fit, params, Parity.EVEN, COMMUTATOR_OFFSET, 2)

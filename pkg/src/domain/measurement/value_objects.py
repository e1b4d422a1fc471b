"""
VALUE OBJECTS de la medición: registros de disparos, semillas, bases de
ajuste y resultados del ajuste polinomial.
"""
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from src.domain.measurement.exceptions import InvalidRecordError

NOISELESS_SHOTS = 10 ** 12
UINT64_MAX = 2 ** 64 - 1


# ─────────────────────────────────────────────────────────────
# MEASUREMENT RECORD
# ─────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class MeasurementRecord:
    """Un punto de datos sintético: (g, t, disparos, éxitos)."""
    g: float
    t: float
    shots: int
    successes: int

    def __post_init__(self):
        if not (math.isfinite(self.g) and math.isfinite(self.t)):
            raise InvalidRecordError(f"g={self.g!r} y t={self.t!r} deben ser finitos.")
        if int(self.shots) != self.shots or self.shots < 1:
            raise InvalidRecordError(f"shots={self.shots!r} debe ser un entero ≥ 1.")
        if int(self.successes) != self.successes or not 0 <= self.successes <= self.shots:
            raise InvalidRecordError(
                f"successes={self.successes!r} debe ser un entero en [0, {self.shots}]."
            )
        object.__setattr__(self, "g", float(self.g))
        object.__setattr__(self, "t", float(self.t))
        object.__setattr__(self, "shots", int(self.shots))
        object.__setattr__(self, "successes", int(self.successes))

    @property
    def p_hat(self) -> float:
        return self.successes / self.shots

    @classmethod
    def noiseless(cls, g: float, t: float, probability: float) -> "MeasurementRecord":
        """Registro sin ruido: 10¹² disparos con p̂ = p redondeado a 1e−12."""
        p = min(max(probability, 0.0), 1.0)
        return cls(g=g, t=t, shots=NOISELESS_SHOTS, successes=round(p * NOISELESS_SHOTS))


# ─────────────────────────────────────────────────────────────
# SEED SPEC
# ─────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class SeedSpec:
    """
    Semilla maestra de 64 bits. Cada (punto, réplica) obtiene su propio
    sub-flujo contador: SeedSequence(master_seed, spawn_key=(punto, réplica)).
    """
    master_seed: int

    def __post_init__(self):
        if isinstance(self.master_seed, bool) or int(self.master_seed) != self.master_seed:
            raise InvalidRecordError(f"master_seed={self.master_seed!r} debe ser entero.")
        if not 0 <= self.master_seed <= UINT64_MAX:
            raise InvalidRecordError(f"master_seed={self.master_seed} fuera de [0, 2⁶⁴ − 1].")
        object.__setattr__(self, "master_seed", int(self.master_seed))

    def generator(self, point_index: int, replicate_index: int = 0) -> np.random.Generator:
        sequence = np.random.SeedSequence(
            self.master_seed, spawn_key=(int(point_index), int(replicate_index))
        )
        return np.random.Generator(np.random.Philox(sequence))


# ─────────────────────────────────────────────────────────────
# FIT BASIS
# ─────────────────────────────────────────────────────────────
class Parity(str, Enum):
    ODD = "odd"
    EVEN = "even"


DEFAULT_MAX_POWER = {Parity.ODD: 5, Parity.EVEN: 6}


@dataclass(frozen=True)
class FitBasis:
    """Odd = {g, g³, …, g^max}; Even = {g², g⁴, …, g^max} (sin término constante)."""
    parity: Parity
    max_power: int

    def __post_init__(self):
        parity = Parity(self.parity)
        object.__setattr__(self, "parity", parity)
        minimum = 1 if parity is Parity.ODD else 2
        if int(self.max_power) != self.max_power or self.max_power < minimum:
            raise InvalidRecordError(f"max_power={self.max_power!r} debe ser ≥ {minimum} para base {parity.value}.")
        if self.max_power % 2 != minimum % 2:
            raise InvalidRecordError(
                f"max_power={self.max_power} no respeta la paridad {parity.value}."
            )
        object.__setattr__(self, "max_power", int(self.max_power))

    @classmethod
    def odd(cls, max_power: int = DEFAULT_MAX_POWER[Parity.ODD]) -> "FitBasis":
        return cls(Parity.ODD, max_power)

    @classmethod
    def even(cls, max_power: int = DEFAULT_MAX_POWER[Parity.EVEN]) -> "FitBasis":
        return cls(Parity.EVEN, max_power)

    @property
    def powers(self) -> tuple[int, ...]:
        start = 1 if self.parity is Parity.ODD else 2
        return tuple(range(start, self.max_power + 1, 2))

    @property
    def size(self) -> int:
        return len(self.powers)

    def design_matrix(self, g) -> np.ndarray:
        return np.power.outer(np.asarray(g, dtype=float), np.array(self.powers))


# ─────────────────────────────────────────────────────────────
# FIT RESULT
# ─────────────────────────────────────────────────────────────
@dataclass(frozen=True, eq=False)
class FitResult:
    """Coeficientes del ajuste con su covarianza y diagnósticos."""
    basis: FitBasis
    offset: float
    coefficients: np.ndarray = field(repr=False)
    covariance: np.ndarray = field(repr=False)
    residual_rms: float
    condition_number: float

    def __post_init__(self):
        coefficients = np.array(self.coefficients, dtype=float)
        covariance = np.array(self.covariance, dtype=float)
        if coefficients.shape != (self.basis.size,):
            raise InvalidRecordError(
                f"Se esperaban {self.basis.size} coeficientes (recibidos {coefficients.shape})."
            )
        if covariance.shape != (self.basis.size, self.basis.size):
            raise InvalidRecordError(f"Covarianza con forma inválida {covariance.shape}.")
        covariance = (covariance + covariance.T) / 2.0
        coefficients.setflags(write=False)
        covariance.setflags(write=False)
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "covariance", covariance)

    def _index(self, power: int) -> int:
        try:
            return self.basis.powers.index(power)
        except ValueError:
            raise InvalidRecordError(
                f"La potencia g^{power} no pertenece a la base {self.basis.parity.value}."
            ) from None

    def coefficient(self, power: int) -> float:
        return float(self.coefficients[self._index(power)])

    def stderr(self, power: int) -> float:
        i = self._index(power)
        return float(math.sqrt(max(self.covariance[i, i], 0.0)))

    def evaluate(self, g) -> np.ndarray:
        """offset + Σ c_p g^p."""
        return self.offset + self.basis.design_matrix(g) @ self.coefficients

    def to_dict(self) -> dict:
        return {
            "parity": self.basis.parity.value,
            "max_power": self.basis.max_power,
            "powers": list(self.basis.powers),
            "offset": self.offset,
            "coefficients": [float(c) for c in self.coefficients],
            "covariance": [float(c) for c in self.covariance.ravel()],
            "residual_rms": self.residual_rms,
            "condition_number": self.condition_number,
        }


# ─────────────────────────────────────────────────────────────
# ESTIMATE
# ─────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class Estimate:
    """Valor físico extraído (unidades de ħκ′) con su error estándar."""
    value: float
    stderr: float

    def z_score(self, reference: float = 0.0) -> float:
        if not self.stderr > 0:
            return math.nan
        return (self.value - reference) / self.stderr

    def covers(self, reference: float, sigmas: float = 3.0) -> bool:
        return abs(self.value - reference) <= sigmas * self.stderr

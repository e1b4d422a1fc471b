"""
VALUE OBJECTS del dominio vibrónico.

Regla de oro: son INMUTABLES (frozen=True) y se validan al construirse.
Unidades internas: tiempo en 1/κ′, energías en ħκ′, ħ = 1.

Base del espacio de estados: |e, n⟩ con e ∈ {1, 2} (fundamental, excitado)
y n ∈ 0..N_max. Las amplitudes se guardan como matriz (2, N_max+1):
la fila 0 es |1, n⟩ y la fila 1 es |2, n⟩.
"""
import math
from dataclasses import dataclass, field, replace

import numpy as np

from src.domain.vibronic.exceptions import InvalidModelParameters, InvalidStateError

AMPLITUDE_NORM_TOLERANCE = 1e-12
DISTRIBUTION_SUM_TOLERANCE = 1e-10
STATE_NORM_TOLERANCE = 1e-10


# ─────────────────────────────────────────────────────────────
# MODEL PARAMS
# ─────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class ModelParams:
    """
    Parámetros físicos del modelo de Jaynes-Cummings no lineal desintonizado.

    El acoplamiento efectivo es siempre |κ| = g·κ′ (`coupling`).
    `trap_frequency` (ν) se conserva para documentar la corrida, pero ningún
    observable en la imagen de interacción depende de él: [Â₂₂, Ĥ₀] = 0.
    """
    sideband_order: int = 0
    lamb_dicke: float = 0.2
    detuning: float = 0.2
    base_coupling: float = 1.0
    coupling_scale: float = 1.0
    laser_phase: float = 0.0
    trap_position_phase: float = 0.0
    trap_frequency: float = 5000.0
    fock_cutoff: int = 40

    def __post_init__(self):
        if isinstance(self.sideband_order, bool) or int(self.sideband_order) != self.sideband_order:
            raise InvalidModelParameters("sideband_order", self.sideband_order, "debe ser entero")
        if self.sideband_order < 0:
            raise InvalidModelParameters("sideband_order", self.sideband_order, "debe ser ≥ 0")
        if not self.lamb_dicke > 0:
            raise InvalidModelParameters("lamb_dicke", self.lamb_dicke, "debe ser > 0")
        if not self.base_coupling > 0:
            raise InvalidModelParameters("base_coupling", self.base_coupling, "debe ser > 0")
        if not self.coupling_scale >= 0:
            raise InvalidModelParameters("coupling_scale", self.coupling_scale, "debe ser ≥ 0")
        if int(self.fock_cutoff) != self.fock_cutoff or self.fock_cutoff < 1:
            raise InvalidModelParameters("fock_cutoff", self.fock_cutoff, "debe ser un entero ≥ 1")
        for name in ("detuning", "laser_phase", "trap_position_phase", "trap_frequency"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidModelParameters(name, getattr(self, name), "debe ser finito")
        object.__setattr__(self, "sideband_order", int(self.sideband_order))
        object.__setattr__(self, "fock_cutoff", int(self.fock_cutoff))

    @property
    def coupling(self) -> float:
        """|κ| = g·κ′."""
        return self.coupling_scale * self.base_coupling

    @property
    def dimension(self) -> int:
        return 2 * (self.fock_cutoff + 1)

    def with_coupling(self, coupling_scale: float) -> "ModelParams":
        return replace(self, coupling_scale=coupling_scale)

    def with_cutoff(self, fock_cutoff: int) -> "ModelParams":
        return replace(self, fock_cutoff=fock_cutoff)


# ─────────────────────────────────────────────────────────────
# ELECTRONIC AMPLITUDES
# ─────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class ElectronicAmplitudes:
    """Estado electrónico puro γ1|1⟩ + γ2|2⟩."""
    gamma1: complex
    gamma2: complex

    def __post_init__(self):
        g1, g2 = complex(self.gamma1), complex(self.gamma2)
        norm = abs(g1) ** 2 + abs(g2) ** 2
        if abs(norm - 1.0) > AMPLITUDE_NORM_TOLERANCE:
            raise InvalidStateError(
                f"|γ1|² + |γ2|² = {norm:.15g}; debe ser 1 (tolerancia {AMPLITUDE_NORM_TOLERANCE:.0e})."
            )
        object.__setattr__(self, "gamma1", g1)
        object.__setattr__(self, "gamma2", g2)

    @classmethod
    def ground(cls) -> "ElectronicAmplitudes":
        return cls(1.0, 0.0)

    @classmethod
    def excited(cls) -> "ElectronicAmplitudes":
        return cls(0.0, 1.0)

    @classmethod
    def phase_superposition(cls) -> "ElectronicAmplitudes":
        """γ1 = e^{iπ/2}/√2, γ2 = 1/√2: ⟨Ĥ⟩(0) = 0 y σ₂₂(0) = 1/2."""
        return cls(1j / math.sqrt(2.0), 1.0 / math.sqrt(2.0))

    @property
    def coherence(self) -> complex:
        """γ1·γ2*, la coherencia que acopla Ĥ de la banda cero."""
        return self.gamma1 * self.gamma2.conjugate()

    @property
    def excited_population(self) -> float:
        return abs(self.gamma2) ** 2


# ─────────────────────────────────────────────────────────────
# MOTIONAL SPEC (unión etiquetada)
# ─────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class Fock:
    """Estado de Fock |n⟩."""
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 0:
            raise InvalidStateError(f"Índice de Fock inválido: {self.n!r}.")
        object.__setattr__(self, "n", int(self.n))


@dataclass(frozen=True)
class Coherent:
    """Estado coherente |α0⟩."""
    alpha0: complex

    def __post_init__(self):
        a = complex(self.alpha0)
        if not (math.isfinite(a.real) and math.isfinite(a.imag)):
            raise InvalidStateError(f"Amplitud coherente no finita: {self.alpha0!r}.")
        object.__setattr__(self, "alpha0", a)

    @property
    def mean_number(self) -> float:
        return abs(self.alpha0) ** 2


@dataclass(frozen=True)
class NumberDistribution:
    """Mezcla diagonal en Fock: P_n para n = 0..N_max."""
    probabilities: tuple[float, ...]

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probabilities)
        if not probs:
            raise InvalidStateError("La distribución de número está vacía.")
        if any(p < 0 or not math.isfinite(p) for p in probs):
            raise InvalidStateError("La distribución de número tiene entradas negativas o no finitas.")
        total = math.fsum(probs)
        if abs(total - 1.0) > DISTRIBUTION_SUM_TOLERANCE:
            raise InvalidStateError(
                f"Σ P_n = {total:.15g}; debe ser 1 (tolerancia {DISTRIBUTION_SUM_TOLERANCE:.0e})."
            )
        object.__setattr__(self, "probabilities", probs)

    @property
    def fock_cutoff(self) -> int:
        return len(self.probabilities) - 1


MotionalSpec = Fock | Coherent | NumberDistribution


# ─────────────────────────────────────────────────────────────
# VIBRONIC STATE
# ─────────────────────────────────────────────────────────────
@dataclass(frozen=True, eq=False)
class VibronicState:
    """
    Vector de amplitudes sobre |e⟩⊗|n⟩, guardado como matriz (2, N_max+1).
    Norma 1 dentro de 1e−10 (un coherente truncado pierde < 1e−12).
    """
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.ndim != 2 or amps.shape[0] != 2 or amps.shape[1] < 2:
            raise InvalidStateError(f"Forma de amplitudes inválida: {amps.shape}.")
        norm = float(np.sum(np.abs(amps) ** 2))
        if abs(norm - 1.0) > STATE_NORM_TOLERANCE:
            raise InvalidStateError(f"Norma al cuadrado {norm:.15g} ≠ 1.")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, electronic_level: int, n: int, fock_cutoff: int) -> "VibronicState":
        """Estado de base |e, n⟩ con e ∈ {1, 2}."""
        if electronic_level not in (1, 2):
            raise InvalidStateError(f"Nivel electrónico inválido: {electronic_level}.")
        if not 0 <= n <= fock_cutoff:
            raise InvalidStateError(f"n={n} fuera de la base truncada 0..{fock_cutoff}.")
        amps = np.zeros((2, fock_cutoff + 1), dtype=complex)
        amps[electronic_level - 1, n] = 1.0
        return cls(amps)

    @classmethod
    def product(
        cls,
        electronic: ElectronicAmplitudes,
        motional_amplitudes: np.ndarray,
    ) -> "VibronicState":
        """(γ1|1⟩ + γ2|2⟩) ⊗ Σ c_n |n⟩."""
        c = np.asarray(motional_amplitudes, dtype=complex)
        return cls(np.vstack([electronic.gamma1 * c, electronic.gamma2 * c]))

    @property
    def fock_cutoff(self) -> int:
        return self.amplitudes.shape[1] - 1

    @property
    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2)))

    @property
    def excited_population(self) -> float:
        """σ₂₂ = ⟨Â₂₂⟩ trazado sobre el movimiento."""
        return float(np.sum(np.abs(self.amplitudes[1]) ** 2))

    def flat(self) -> np.ndarray:
        """Vector plano con índice e_fila·(N_max+1) + n."""
        return self.amplitudes.reshape(-1)

    @classmethod
    def from_flat(cls, vector: np.ndarray) -> "VibronicState":
        vec = np.asarray(vector, dtype=complex)
        return cls(vec.reshape(2, vec.size // 2))

    def __repr__(self) -> str:
        return f"VibronicState(N_max={self.fock_cutoff}, σ22={self.excited_population:.6f})"


# ─────────────────────────────────────────────────────────────
# BLOCK COEFFICIENTS
# ─────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class BlockCoefficients:
    """
    Entradas exactas del bloque 2×2 (|2, n⟩, |1, n+k⟩) del propagador.
    |a_n|² + |b_n|² = 1 y Γ_n ≥ |Δω|/2.
    """
    n: int
    a_n: complex
    b_n: complex
    gamma_n: float
    w_n: float

    @property
    def unitarity_defect(self) -> float:
        return abs(abs(self.a_n) ** 2 + abs(self.b_n) ** 2 - 1.0)

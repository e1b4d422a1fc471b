"""
EXCEPCIONES del dominio vibrónico (modelo de Jaynes-Cummings no lineal).

Cada excepción nombra QUÉ salió mal sin tener que leer el mensaje.

Jerarquía:
    DomainError (base compartida)
        └── VibronicModelError
            ├── InvalidModelParameters
            ├── InvalidStateError
            ├── CutoffInsufficient        (numérica)
            ├── WrongSideband
            ├── ZeroDetuning
            ├── StepSizeUnderflow         (numérica)
            └── QuadratureNotConverged    (numérica)

Uso en la CLI:
    try:
        handler.handle(command)
    except NumericalFailure:
        raise CommandError(str(exc), returncode=3)
"""
from src.domain.shared.base import DomainError, NumericalFailure


class VibronicModelError(DomainError):
    """Base de todas las excepciones del modelo vibrónico."""
    pass


class InvalidModelParameters(VibronicModelError):
    """Un parámetro físico viola su rango permitido."""
    def __init__(self, field_name: str, value, reason: str):
        super().__init__(f"Parámetro '{field_name}'={value!r} inválido: {reason}.")
        self.field_name = field_name
        self.value = value


class InvalidStateError(VibronicModelError):
    """Amplitudes o distribución que no describen un estado físico."""
    pass


class CutoffInsufficient(VibronicModelError, NumericalFailure):
    """La base de Fock truncada pierde demasiada probabilidad."""
    def __init__(self, fock_cutoff: int, tail_mass: float, limit: float):
        super().__init__(
            f"N_max={fock_cutoff} deja una cola de Poisson de {tail_mass:.3e} "
            f"(máximo permitido {limit:.0e})."
        )
        self.fock_cutoff = fock_cutoff
        self.tail_mass = tail_mass


class WrongSideband(VibronicModelError):
    """La fórmula cerrada solo vale para otra banda lateral."""
    def __init__(self, required: int, actual: int):
        super().__init__(
            f"Esta expresión requiere la banda lateral k={required} (recibida k={actual})."
        )
        self.required = required
        self.actual = actual


class ZeroDetuning(VibronicModelError):
    """Con Δω = 0 la identidad ħΔω[σ₂₂(t) − σ₂₂(0)] es vacía."""
    def __init__(self):
        super().__init__(
            "La desintonía Δω es cero: el Hamiltoniano no depende explícitamente "
            "del tiempo y ambos lados de la identidad se anulan."
        )


class StepSizeUnderflow(VibronicModelError, NumericalFailure):
    """El integrador adaptativo no pudo avanzar."""
    def __init__(self, time_reached: float, message: str):
        super().__init__(
            f"El integrador se detuvo en t={time_reached:.6g}: {message}"
        )
        self.time_reached = time_reached


class QuadratureNotConverged(VibronicModelError, NumericalFailure):
    """La cuadratura no alcanzó la tolerancia pedida."""
    def __init__(self, value: float, error_estimate: float, tolerance: float):
        super().__init__(
            f"Cuadratura no convergida: valor={value:.6g}, "
            f"error estimado={error_estimate:.2e} > tolerancia={tolerance:.2e}."
        )
        self.value = value
        self.error_estimate = error_estimate

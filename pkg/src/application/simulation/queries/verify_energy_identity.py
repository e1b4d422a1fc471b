"""
QUERY: VerifyEnergyIdentity
Compara ambos lados de ħΔω[σ₂₂(t) − σ₂₂(0)] = ⟨Ĥ⟩(t) − ⟨Ĥ⟩(0) sin ruido:
el izquierdo desde la población excitada, el derecho contrayendo el
vector de estado evolucionado con el Hamiltoniano explícito.
"""
import logging
import math
from dataclasses import dataclass

from src.application.dtos import IdentityCheckDTO
from src.domain.shared.task_runner import TaskRunner
from src.domain.vibronic.analytics import h_from_sigma22, heisenberg_energy
from src.domain.vibronic.hamiltonian import energy_expectation
from src.domain.vibronic.propagator import sigma22_exact
from src.domain.vibronic.states import pure_components
from src.domain.vibronic.value_objects import ElectronicAmplitudes, ModelParams, MotionalSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerifyEnergyIdentityQuery:
    params: ModelParams
    electronic: ElectronicAmplitudes
    motional: MotionalSpec
    times: tuple[float, ...]


class VerifyEnergyIdentityQueryHandler:

    def __init__(self, runner: TaskRunner):
        self._runner = runner

    def handle(self, query: VerifyEnergyIdentityQuery) -> list[IdentityCheckDTO]:
        params = query.params
        components = pure_components(query.electronic, query.motional, params.fock_cutoff)
        sigma22_0 = sigma22_exact(params, query.electronic, query.motional, 0.0)

        def check(t: float) -> IdentityCheckDTO:
            sigma22_t = sigma22_exact(params, query.electronic, query.motional, t)
            rhs = math.fsum(
                weight * (heisenberg_energy(params, state, t) - energy_expectation(params, state, 0.0))
                for weight, state in components
            )
            return IdentityCheckDTO(t=t, sigma22=sigma22_t, lhs=h_from_sigma22(params, sigma22_t, sigma22_0), rhs=rhs)

        checks = self._runner.map(check, list(query.times))
        worst = max((c.abs_difference for c in checks), default=0.0)
        logger.info(f"[EnergyIdentity] {len(checks)} tiempos, máxima diferencia {worst:.3e}")
        return checks

"""
Configuración de una corrida ya validada, traducida a objetos de dominio.

La capa de interfaces valida la FORMA del documento (serializers DRF);
aquí se construyen los Value Objects, que validan la FÍSICA. Cualquier
violación se reporta como ConfigurationError con la ruta del campo.
"""
import hashlib
import json
import math
from dataclasses import dataclass, field

import numpy as np

from src.domain.measurement.value_objects import FitBasis, SeedSpec
from src.domain.shared.base import DomainError
from src.domain.vibronic.states import suggested_cutoff
from src.domain.vibronic.value_objects import (
    Coherent,
    ElectronicAmplitudes,
    Fock,
    ModelParams,
    MotionalSpec,
    NumberDistribution,
)


class ConfigurationError(Exception):
    """Documento de configuración ilegible o inválido (código de salida 2)."""
    def __init__(self, message: str, errors: list[str] | None = None):
        self.errors = errors or [message]
        super().__init__(message if errors is None else message + "\n  " + "\n  ".join(errors))


# ─────────────────────────────────────────────────────────────
# EXPERIMENT CONFIG
# ─────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class ExperimentConfig:
    """Todo lo que un handler necesita, ya como objetos de dominio."""
    command: str
    params: ModelParams
    sideband_orders: tuple[int, ...]
    electronic: ElectronicAmplitudes
    motional: MotionalSpec
    fock_states: tuple[int, ...]
    g_grid: tuple[float, ...]
    g_max_per_sideband: dict[int, float]
    g_min: float | None
    g_points: int
    times: tuple[float, ...]
    shots: int
    replicates: int
    seed: SeedSpec
    basis: FitBasis
    offset: float
    records_path: str | None
    curve_points: int
    mode: str
    prefix: str
    effective: dict = field(repr=False, compare=False)

    @property
    def config_hash(self) -> str:
        """SHA-256 del JSON canónico de la configuración efectiva."""
        canonical = json.dumps(self.effective, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def grid_for_sideband(self, sideband_order: int) -> tuple[float, ...]:
        g_max = self.g_max_per_sideband.get(sideband_order)
        if g_max is None:
            return self.g_grid
        return coupling_grid(self.g_min, g_max, self.g_points)


def coupling_grid(g_min: float | None, g_max: float, points: int) -> tuple[float, ...]:
    """`points` valores equiespaciados en (0, g_max], o en [g_min, g_max] si se indica g_min."""
    if g_min is None:
        return tuple(float(g) for g in g_max * np.arange(1, points + 1) / points)
    return tuple(float(g) for g in np.linspace(g_min, g_max, points))


def _complex(pair, path: str) -> complex:
    if pair is None:
        raise ConfigurationError(f"{path}: valor requerido.")
    return complex(pair[0], pair[1])


def _electronic(section: dict) -> ElectronicAmplitudes:
    preset = section["preset"]
    if preset == "ground":
        return ElectronicAmplitudes.ground()
    if preset == "excited":
        return ElectronicAmplitudes.excited()
    if preset == "phase_superposition":
        return ElectronicAmplitudes.phase_superposition()
    return ElectronicAmplitudes(
        _complex(section.get("gamma1"), "input_state.electronic.gamma1"),
        _complex(section.get("gamma2"), "input_state.electronic.gamma2"),
    )


def _motional(section: dict) -> MotionalSpec:
    kind = section["kind"]
    if kind == "fock":
        if section.get("n") is None:
            raise ConfigurationError("input_state.motional.n: valor requerido para kind=fock.")
        return Fock(section["n"])
    if kind == "coherent":
        return Coherent(_complex(section.get("alpha0"), "input_state.motional.alpha0"))
    if not section.get("probabilities"):
        raise ConfigurationError("input_state.motional.probabilities: valor requerido para kind=distribution.")
    return NumberDistribution(tuple(section["probabilities"]))


def _times(sampling: dict, detuning: float) -> tuple[float, ...]:
    if sampling.get("times"):
        return tuple(float(t) for t in sampling["times"])
    grid = sampling.get("time_grid")
    if not grid:
        raise ConfigurationError("sampling: se requiere 'times' o 'time_grid'.")
    stop = grid.get("stop")
    if stop is None:
        if detuning == 0.0:
            raise ConfigurationError("sampling.time_grid.stop: requerido cuando Δω = 0.")
        stop = 2.0 * math.pi / abs(detuning)
    if stop < grid["start"]:
        raise ConfigurationError("sampling.time_grid: stop debe ser ≥ start.")
    return tuple(float(t) for t in np.linspace(grid["start"], stop, grid["points"]))


def resolve_cutoff(model: dict, motional: MotionalSpec, sideband_orders, fock_states) -> int:
    """N_max explícito, o el mínimo que exigen el estado de movimiento y los Fock pedidos."""
    if model.get("fock_cutoff") is not None:
        return int(model["fock_cutoff"])
    k_max = max(sideband_orders)
    candidates = [suggested_cutoff(motional, k_max)]
    candidates += [n + k_max + 1 for n in fock_states]
    return max(candidates)


def build_experiment(command: str, document: dict) -> ExperimentConfig:
    """Traduce el documento validado a un ExperimentConfig."""
    model = document["model"]
    state = document["input_state"]
    sampling = document["sampling"]
    fit = document["fit"]
    output = document["output"]
    try:
        motional = _motional(state["motional"])
        sideband_orders = tuple(model.get("sideband_orders") or [model["sideband_order"]])
        if command != "fig4":
            sideband_orders = (model["sideband_order"],)
        fock_states = tuple(state.get("fock_states") or [0])
        cutoff = resolve_cutoff(model, motional, sideband_orders, fock_states if command == "fig2" else ())
        params = ModelParams(
            sideband_order=model["sideband_order"],
            lamb_dicke=model["lamb_dicke"],
            detuning=model["detuning"],
            base_coupling=model["base_coupling"],
            coupling_scale=1.0,
            laser_phase=model["laser_phase"],
            trap_position_phase=model["trap_position_phase"],
            trap_frequency=model["trap_frequency"],
            fock_cutoff=cutoff,
        )
        basis = FitBasis(fit["parity"], fit["max_power"])
        seed = SeedSpec(sampling["master_seed"])
        electronic = _electronic(state["electronic"])
    except DomainError as exc:
        raise ConfigurationError(f"Configuración físicamente inválida: {exc}") from exc

    return ExperimentConfig(
        command=command,
        params=params,
        sideband_orders=sideband_orders,
        electronic=electronic,
        motional=motional,
        fock_states=fock_states,
        g_grid=coupling_grid(sampling.get("g_min"), sampling["g_max"], sampling["g_points"]),
        g_max_per_sideband={int(k): float(v) for k, v in (sampling.get("g_max_per_sideband") or {}).items()},
        g_min=sampling.get("g_min"),
        g_points=sampling["g_points"],
        times=_times(sampling, model["detuning"]),
        shots=sampling["shots"],
        replicates=sampling["replicates"],
        seed=seed,
        basis=basis,
        offset=fit["offset"],
        records_path=fit.get("records_path"),
        curve_points=fit["curve_points"],
        mode=output["mode"],
        prefix=output["prefix"],
        effective=document,
    )

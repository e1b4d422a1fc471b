"""
PRESETS de cada comando: el escenario de referencia de cada figura.

El documento JSON del usuario se fusiona SOBRE el preset; cualquier valor
se puede sobreescribir. Unidades: tiempo en 1/κ′, Δω en κ′.

Rango de acoplo: las bases de paridad convergen en g·w_n·t, no en g. Con
κ′t = 40, k = 2 y |α0|² = 12, un ajuste par hasta g⁶ sobre 20 puntos en
(0, 0.5] da c₂ ≈ 0.689 frente a 0.458 (50 % de sesgo); en (0, 0.1] queda a
4e-5. Por eso g_max es 0.05 o 0.1 y fig4 lo fija por banda lateral.
"""
import copy
import math

DEFAULT_MASTER_SEED = 20_240_601

_MODEL = {
    "sideband_order": 0,
    "lamb_dicke": 0.2,
    "detuning": 0.2,
    "base_coupling": 1.0,
    "laser_phase": 0.0,
    "trap_position_phase": 0.0,
    "trap_frequency": 5000.0,
    "fock_cutoff": None,
    "sideband_orders": [0],
}

_SUPERPOSITION_FOCK0 = {
    "electronic": {"preset": "phase_superposition", "gamma1": None, "gamma2": None},
    "motional": {"kind": "fock", "n": 0, "alpha0": None, "probabilities": None},
    "fock_states": [0],
}

_GROUND_COHERENT = {
    "electronic": {"preset": "ground", "gamma1": None, "gamma2": None},
    "motional": {"kind": "coherent", "n": None, "alpha0": [math.sqrt(12.0), 0.0], "probabilities": None},
    "fock_states": [0],
}

_SAMPLING = {
    "g_min": None,
    "g_max": 0.05,
    "g_points": 20,
    "g_max_per_sideband": {},
    "times": [10.0],
    "time_grid": None,
    "shots": 1000,
    "replicates": 1,
    "master_seed": DEFAULT_MASTER_SEED,
}

_ODD_FIT = {"parity": "odd", "max_power": 5, "offset": 0.5, "records_path": None, "curve_points": 101}
_EVEN_FIT = {"parity": "even", "max_power": 6, "offset": 0.0, "records_path": None, "curve_points": 101}


def _document(model: dict, input_state: dict, sampling: dict, fit: dict, output: dict) -> dict:
    return {
        "model": {**_MODEL, **model},
        "input_state": copy.deepcopy(input_state),
        "sampling": {**_SAMPLING, **sampling},
        "fit": dict(fit),
        "output": {"mode": "simulate", "prefix": "", **output},
    }


PRESETS = {
    "fig1": _document(
        {}, _SUPERPOSITION_FOCK0, {}, _ODD_FIT, {"prefix": "fig1_"}
    ),
    "fig2": _document(
        {},
        {**_SUPERPOSITION_FOCK0, "fock_states": [0, 1, 2, 3, 4, 5, 6]},
        {"shots": 5000},
        _ODD_FIT,
        {"prefix": "fig2_"},
    ),
    "fig3": _document(
        {"sideband_order": 2},
        _GROUND_COHERENT,
        {"g_max": 0.1, "times": [40.0], "shots": 10_000},
        _EVEN_FIT,
        {"prefix": "fig3_"},
    ),
    "fig4": _document(
        {"sideband_orders": [2, 0]},
        _GROUND_COHERENT,
        {
            "g_max": 0.1,
            "g_max_per_sideband": {"0": 0.03, "2": 0.1},
            "times": None,
            # stop = null → un período de desintonía, 2π/|Δω|
            "time_grid": {"start": 0.0, "stop": None, "points": 40},
            "shots": 20_000,
        },
        _EVEN_FIT,
        {"prefix": "fig4_"},
    ),
    "run": _document({}, _SUPERPOSITION_FOCK0, {}, _ODD_FIT, {"mode": "simulate", "prefix": "run_"}),
}


def preset_for(command: str) -> dict:
    """Copia profunda del preset (los presets nunca se mutan)."""
    return copy.deepcopy(PRESETS[command])


def deep_merge(base: dict, overrides: dict) -> dict:
    """
    Fusiona `overrides` sobre `base`. Los dicts se fusionan por clave; el resto
    se reemplaza. Las claves que no existen en `base` se conservan para que el
    validador las rechace.
    """
    merged = copy.deepcopy(base)
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict) and key != "g_max_per_sideband":
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged

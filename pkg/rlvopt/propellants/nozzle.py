import math

from scipy.optimize import brentq

from rlvopt.constants import G0
from rlvopt.propellants.performance import EngineDesign, EnginePerformance
from rlvopt.propellants.thermo import CombustionState


def area_ratio(mach: float, gamma: float) -> float:
    term = 2.0 / (gamma + 1.0) * (1.0 + 0.5 * (gamma - 1.0) * mach * mach)
    return term ** ((gamma + 1.0) / (2.0 * (gamma - 1.0))) / mach


def exit_mach(expansion_ratio: float, gamma: float) -> float:
    """Supersonic root of the area-Mach relation."""
    if expansion_ratio <= 1.0:
        return 1.0
    return brentq(lambda m: area_ratio(m, gamma) - expansion_ratio, 1.0, 100.0, xtol=1e-12)


def exit_pressure_ratio(expansion_ratio: float, gamma: float) -> float:
    mach = exit_mach(expansion_ratio, gamma)
    return (1.0 + 0.5 * (gamma - 1.0) * mach * mach) ** (-gamma / (gamma - 1.0))


def vacuum_thrust_coefficient(expansion_ratio: float, gamma: float) -> tuple[float, float]:
    """Returns (C_F,vac, p_e/p_c) for frozen isentropic expansion."""
    pr = exit_pressure_ratio(expansion_ratio, gamma)
    big_gamma = math.sqrt(gamma) * (2.0 / (gamma + 1.0)) ** (
        (gamma + 1.0) / (2.0 * (gamma - 1.0))
    )
    momentum = big_gamma * math.sqrt(
        2.0 * gamma / (gamma - 1.0) * (1.0 - pr ** ((gamma - 1.0) / gamma))
    )
    return momentum + pr * expansion_ratio, pr


def ideal_nozzle_performance(
    state: CombustionState,
    design: EngineDesign,
    p_ambient: float = 0.0,
    separation_pressure_ratio: float = 0.3,
) -> EnginePerformance:
    if p_ambient < 0:
        raise ValueError(f"ambient pressure must be non-negative, got {p_ambient}")
    cf_vac, pr = vacuum_thrust_coefficient(design.expansion_ratio, state.gamma)
    massflow = state.chamber_pressure * design.throat_area / state.c_star
    exit_pressure = pr * state.chamber_pressure
    return EnginePerformance(
        isp_vac=cf_vac * state.c_star / G0,
        exit_area=design.exit_area,
        total_massflow=massflow,
        exit_pressure=exit_pressure,
        flow_separation=exit_pressure < separation_pressure_ratio * p_ambient,
    )

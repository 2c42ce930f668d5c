from dataclasses import replace

from rlvopt.errors import CyclePowerInfeasible
from rlvopt.propellants.config import GasGeneratorAssumptions
from rlvopt.propellants.performance import EngineDesign, EnginePerformance
from rlvopt.propellants.thermo import CombustionState


def pump_work(design: EngineDesign, assumptions: GasGeneratorAssumptions) -> float:
    """Shaft work per kg of delivered propellant, J/kg."""
    pressure_rise = assumptions.pump_pressure_factor * design.chamber_pressure
    volume = design.combo.bulk_specific_volume(design.mixture_ratio)
    return volume * pressure_rise / assumptions.pump_efficiency


def turbine_work(design: EngineDesign, assumptions: GasGeneratorAssumptions) -> float:
    """Shaft work per kg of gas-generator exhaust, J/kg."""
    gamma = design.combo.gg_gamma
    expansion = 1.0 - assumptions.max_turbine_pressure_ratio ** (-(gamma - 1.0) / gamma)
    return (
        assumptions.turbine_efficiency
        * design.combo.gg_cp
        * assumptions.gg_temperature
        * expansion
    )


def gas_generator_losses(
    perf: EnginePerformance,
    state: CombustionState,
    design: EngineDesign,
    assumptions: GasGeneratorAssumptions,
) -> EnginePerformance:
    # gg flow per unit of core flow
    flow_ratio = pump_work(design, assumptions) / turbine_work(design, assumptions)
    fraction = flow_ratio / (1.0 + flow_ratio)
    if fraction > assumptions.max_massflow_fraction:
        raise CyclePowerInfeasible(
            f"gas generator needs {fraction:.3f} of the flow at p_c {state.chamber_pressure / 1e5:.0f} bar",
            violation=(fraction - assumptions.max_massflow_fraction)
            / assumptions.max_massflow_fraction,
        )
    isp_vac = perf.isp_vac * (1.0 - (1.0 - assumptions.gg_velocity_credit) * fraction)
    return replace(
        perf,
        isp_vac=isp_vac,
        total_massflow=perf.total_massflow * (1.0 + flow_ratio),
        gg_massflow_fraction=fraction,
    )

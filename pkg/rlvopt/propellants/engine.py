import logging
import math
from dataclasses import replace

import numpy as np

from rlvopt.constants import SEA_LEVEL_PRESSURE
from rlvopt.errors import CorrelationRangeExceeded, PerformanceOutOfRange
from rlvopt.propellants.combos import PropellantCombo
from rlvopt.propellants.config import (
    EngineGeometryConfig,
    EngineMassConfig,
    IspCorrectionConfig,
    PropulsionCalibration,
)
from rlvopt.propellants.cycle import gas_generator_losses
from rlvopt.propellants.nozzle import ideal_nozzle_performance
from rlvopt.propellants.performance import EngineDesign, EnginePerformance
from rlvopt.propellants.thermo import equilibrium_lookup


def isp_efficiency(
    chamber_pressure: float, combo: PropellantCombo, config: IspCorrectionConfig
) -> float:
    eta = config.base_efficiency[combo.fuel] + config.pressure_slope * math.log(
        chamber_pressure / config.reference_pressure
    )
    return float(np.clip(eta, config.min_efficiency, config.max_efficiency))


def isp_correction(
    raw_isp: float,
    chamber_pressure: float,
    combo: PropellantCombo,
    config: IspCorrectionConfig | None = None,
) -> float:
    """Scale an ideal vacuum Isp to a delivered one."""
    config = config or IspCorrectionConfig()
    return raw_isp * isp_efficiency(chamber_pressure, combo, config)


def engine_mass(
    thrust_vac: float,
    combo: PropellantCombo,
    expansion_ratio: float,
    config: EngineMassConfig | None = None,
) -> float:
    config = config or EngineMassConfig()
    if not config.min_thrust <= thrust_vac <= config.max_thrust:
        low, high = config.min_thrust, config.max_thrust
        raise CorrelationRangeExceeded(
            f"engine thrust {thrust_vac / 1e3:.0f} kN outside [{low / 1e3:.0f}, {high / 1e3:.0f}] kN",
            violation=max(low - thrust_vac, thrust_vac - high) / low,
        )
    return (
        config.coefficient[combo.fuel] * thrust_vac**config.exponent
        + config.nozzle_coefficient * expansion_ratio
    )


def engine_length(design: EngineDesign, config: EngineGeometryConfig | None = None) -> float:
    """Chamber plus bell nozzle length."""
    config = config or EngineGeometryConfig()
    throat_radius = design.throat_diameter / 2.0
    cone = (math.sqrt(design.expansion_ratio) - 1.0) * throat_radius / math.tan(
        math.radians(config.cone_half_angle)
    )
    return config.bell_fraction * cone + config.chamber_length_throat_diameters * design.throat_diameter


def evaluate_engine(
    design: EngineDesign,
    calibration: PropulsionCalibration | None = None,
    first_stage: bool = True,
    isp_offset: float = 0.0,
) -> EnginePerformance:
    """Full engine evaluation: equilibrium lookup, ideal expansion, delivered-Isp
    correction, gas-generator losses, an optional uniform Isp shift, then mass.

    First-stage engines must also deliver a sane sea-level Isp; upper-stage
    engines only fire in vacuum.
    """
    calibration = calibration or PropulsionCalibration()
    state = equilibrium_lookup(design.combo, design.chamber_pressure, design.mixture_ratio)
    perf = ideal_nozzle_performance(
        state,
        design,
        p_ambient=SEA_LEVEL_PRESSURE if first_stage else 0.0,
        separation_pressure_ratio=calibration.separation_pressure_ratio,
    )
    perf = replace(
        perf,
        isp_vac=isp_correction(
            perf.isp_vac, design.chamber_pressure, design.combo, calibration.isp_correction
        ),
    )
    perf = gas_generator_losses(perf, state, design, calibration.gas_generator)
    if isp_offset:
        perf = replace(perf, isp_vac=perf.isp_vac + isp_offset)

    checked = [("vacuum", perf.isp_vac)]
    if first_stage:
        checked.append(("sea-level", perf.isp_sl))
    for label, isp in checked:
        if not calibration.isp_min <= isp <= calibration.isp_max:
            excess = max(calibration.isp_min - isp, isp - calibration.isp_max)
            raise PerformanceOutOfRange(
                f"{label} Isp {isp:.1f} s outside [{calibration.isp_min:g}, {calibration.isp_max:g}] s",
                violation=excess / calibration.isp_min,
            )

    mass = engine_mass(
        perf.thrust_vac, design.combo, design.expansion_ratio, calibration.engine_mass
    )
    if perf.flow_separation:
        logging.warning(
            f"Exit pressure {perf.exit_pressure:.0f} Pa risks separation at sea level"
        )
    return replace(
        perf,
        engine_mass=mass,
        tvc_mass=calibration.engine_mass.tvc_fraction * mass,
        length=engine_length(design, calibration.engine_geometry),
    )

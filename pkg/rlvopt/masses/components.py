"""Mass estimating relationships for the individual stage components."""

import math

from rlvopt.constants import G0
from rlvopt.masses.config import InsulationConfig, StructureConfig, TankConfig
from rlvopt.masses.geometry import StageGeometry, TankGeometry
from rlvopt.propellants import PropellantCombo


def tank_pressure(tank: TankGeometry, liquid_density: float, config: TankConfig) -> float:
    """Design pressure at the tank bottom: ullage plus hydrostatic head under
    the design axial load."""
    head = liquid_density * G0 * config.axial_load_factor * tank.height
    return config.ullage_pressure + head


def tank_mass(
    tank: TankGeometry,
    pressure: float,
    material_strength: float,
    density: float,
    safety_factor: float = 1.5,
    min_gauge: float = 1.5e-3,
) -> float:
    """Barlow shell mass of the cylinder and both lids, without reinforcement."""
    cylinder_wall = max(safety_factor * pressure * tank.radius / material_strength, min_gauge)
    lid_wall = max(safety_factor * pressure * tank.radius / (2.0 * material_strength), min_gauge)
    return (tank.cylinder_area * cylinder_wall + tank.lid_area * lid_wall) * density


def insulation_areal_density(propellant: str, config: InsulationConfig) -> float:
    try:
        return config.areal_density[propellant]
    except KeyError:
        raise ValueError(f"Unknown insulation propellant: {propellant}")


def insulation_mass(
    geometry: StageGeometry,
    combo: PropellantCombo,
    config: InsulationConfig | None = None,
) -> float:
    config = config or InsulationConfig()
    ox = insulation_areal_density(combo.oxidizer, config) * geometry.ox_tank.wetted_area
    fuel = insulation_areal_density(combo.name, config) * geometry.fuel_tank.wetted_area
    return ox + fuel


def skirt_mass(radius: float, length: float, config: StructureConfig) -> float:
    return config.skirt_areal_density * 2.0 * math.pi * radius * length


def thrust_frame_mass(total_thrust_vac: float, config: StructureConfig) -> float:
    return config.thrust_frame_per_newton * total_thrust_vac

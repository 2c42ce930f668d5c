from dataclasses import dataclass, fields
from typing import Sequence

from rlvopt.errors import DomainError
from rlvopt.masses.components import (
    insulation_mass,
    skirt_mass,
    tank_mass,
    tank_pressure,
    thrust_frame_mass,
)
from rlvopt.masses.config import MassCalibration
from rlvopt.masses.geometry import StageGeometry
from rlvopt.propellants import EnginePerformance, PropellantCombo


@dataclass(frozen=True)
class StageMassBudget:
    tank_mass_fuel: float
    tank_mass_ox: float
    reinforcement_mass: float
    insulation_mass: float
    thrust_frame: float
    skirts: float
    propulsion_mass: float
    equipment_mass: float
    landing_gear_mass: float
    margin_mass: float

    @property
    def dry_mass(self) -> float:
        """Component sum before landing gear and margin."""
        return self.structural_mass - self.landing_gear_mass - self.margin_mass

    @property
    def pre_margin_mass(self) -> float:
        return self.dry_mass + self.landing_gear_mass

    @property
    def structural_mass(self) -> float:
        return sum(getattr(self, f.name) for f in fields(self))

    def as_dict(self) -> dict[str, float]:
        out = {f.name: getattr(self, f.name) for f in fields(self)}
        out["structural_mass"] = self.structural_mass
        return out


def assemble_stage_mass(
    geometry: StageGeometry,
    engines: Sequence[EnginePerformance],
    combo: PropellantCombo,
    is_first_stage: bool,
    tank_pressures: tuple[float, float] | None = None,
    calibration: MassCalibration | None = None,
    interstage_length: float = 0.0,
    landing_gear: bool | None = None,
) -> StageMassBudget:
    """Structural mass budget of one stage.

    ``tank_pressures`` is (fuel, oxidizer); by default it is derived from the
    tank heights. ``interstage_length`` is the length of the interstage the
    first stage carries above its own tanks. Landing gear defaults to the
    first stage only and is added before the margin.
    """
    if not engines:
        raise DomainError("a stage needs at least one engine")
    calibration = calibration or MassCalibration()
    tanks, structure = calibration.tanks, calibration.structure
    if landing_gear is None:
        landing_gear = is_first_stage

    if tank_pressures is None:
        tank_pressures = (
            tank_pressure(geometry.fuel_tank, combo.fuel_density, tanks),
            tank_pressure(geometry.ox_tank, combo.ox_density, tanks),
        )
    fuel_pressure, ox_pressure = tank_pressures
    shell = dict(
        material_strength=tanks.material_strength,
        density=tanks.material_density,
        safety_factor=tanks.safety_factor,
        min_gauge=tanks.min_gauge,
    )
    fuel_tank = tank_mass(geometry.fuel_tank, fuel_pressure, **shell)
    ox_tank = tank_mass(geometry.ox_tank, ox_pressure, **shell)
    reinforcement = (fuel_tank + ox_tank) * (
        tanks.reinforcement_first_stage if is_first_stage else tanks.reinforcement_upper_stage
    )

    r = geometry.radius
    skirts = skirt_mass(r, 2.0 * r, structure)
    if is_first_stage:
        skirts += skirt_mass(r, interstage_length + geometry.engine_length, structure)
    else:
        skirts += skirt_mass(r, geometry.dome_height, structure)

    budget = dict(
        tank_mass_fuel=fuel_tank,
        tank_mass_ox=ox_tank,
        reinforcement_mass=reinforcement,
        insulation_mass=insulation_mass(geometry, combo, calibration.insulation),
        thrust_frame=thrust_frame_mass(sum(e.thrust_vac for e in engines), structure),
        skirts=skirts,
        propulsion_mass=sum(e.propulsion_mass for e in engines),
        equipment_mass=(
            structure.equipment_first_stage if is_first_stage else structure.equipment_upper_stage
        ),
    )
    dry = sum(budget.values())
    gear = structure.landing_gear_fraction * dry if landing_gear else 0.0
    margin = (
        structure.margin_first_stage if is_first_stage else structure.margin_upper_stage
    )
    return StageMassBudget(
        **budget, landing_gear_mass=gear, margin_mass=margin * (dry + gear)
    )

import math
from dataclasses import dataclass

from rlvopt.errors import NonPhysicalGeometry
from rlvopt.propellants import PropellantCombo


@dataclass(frozen=True)
class TankGeometry:
    """Cylindrical tank closed by two hemispherical lids."""

    radius: float
    cylinder_length: float

    def __post_init__(self):
        if self.radius <= 0:
            raise NonPhysicalGeometry(f"tank radius must be positive, got {self.radius}")
        if self.cylinder_length < 0:
            raise NonPhysicalGeometry(
                f"negative cylinder length {self.cylinder_length:.3f} m"
            )

    @property
    def height(self) -> float:
        return self.cylinder_length + 2.0 * self.radius

    @property
    def cylinder_area(self) -> float:
        return 2.0 * math.pi * self.radius * self.cylinder_length

    @property
    def lid_area(self) -> float:
        return 4.0 * math.pi * self.radius**2

    @property
    def wetted_area(self) -> float:
        return self.cylinder_area + self.lid_area

    @property
    def volume(self) -> float:
        return math.pi * self.radius**2 * self.cylinder_length + 4.0 / 3.0 * math.pi * self.radius**3


@dataclass(frozen=True)
class StageGeometry:
    radius: float
    fuel_tank: TankGeometry
    ox_tank: TankGeometry
    engine_length: float = 0.0

    @property
    def dome_height(self) -> float:
        return self.radius

    @property
    def tank_length(self) -> float:
        return self.fuel_tank.height + self.ox_tank.height

    @property
    def total_length(self) -> float:
        return self.tank_length + self.engine_length


def size_tank(volume: float, radius: float) -> TankGeometry:
    """Smallest tank of the given radius holding ``volume``. Volumes below a
    sphere of that radius still get both lids."""
    if radius <= 0:
        raise NonPhysicalGeometry(f"tank radius must be positive, got {radius}")
    if volume < 0:
        raise NonPhysicalGeometry(f"negative tank volume {volume:.3f} m^3")
    lids = 4.0 / 3.0 * math.pi * radius**3
    return TankGeometry(radius, max((volume - lids) / (math.pi * radius**2), 0.0))


def size_stage(
    propellant_mass: float,
    mixture_ratio: float,
    combo: PropellantCombo,
    radius: float,
    engine_length: float = 0.0,
    ullage_fraction: float = 0.05,
) -> StageGeometry:
    if propellant_mass < 0:
        raise NonPhysicalGeometry(f"negative propellant mass {propellant_mass:.1f} kg")
    ox_mass = propellant_mass * mixture_ratio / (1.0 + mixture_ratio)
    fuel_mass = propellant_mass - ox_mass
    grow = 1.0 + ullage_fraction
    return StageGeometry(
        radius=radius,
        fuel_tank=size_tank(fuel_mass / combo.fuel_density * grow, radius),
        ox_tank=size_tank(ox_mass / combo.ox_density * grow, radius),
        engine_length=engine_length,
    )

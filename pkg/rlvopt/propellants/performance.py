import math
from dataclasses import dataclass

from rlvopt.constants import G0, SEA_LEVEL_PRESSURE
from rlvopt.propellants.combos import PropellantCombo


@dataclass(frozen=True)
class EngineDesign:
    combo: PropellantCombo
    chamber_pressure: float
    mixture_ratio: float
    throat_diameter: float
    expansion_ratio: float

    @property
    def throat_area(self) -> float:
        return math.pi * self.throat_diameter**2 / 4.0

    @property
    def exit_area(self) -> float:
        return self.throat_area * self.expansion_ratio


@dataclass(frozen=True)
class EnginePerformance:
    """Single-engine performance. ``isp(p)`` and ``thrust(p)`` are valid at
    any ambient pressure; ``total_massflow`` includes gas-generator flow."""

    isp_vac: float
    exit_area: float
    total_massflow: float
    exit_pressure: float = 0.0
    gg_massflow_fraction: float = 0.0
    engine_mass: float = 0.0
    tvc_mass: float = 0.0
    length: float = 0.0
    flow_separation: bool = False

    def isp(self, p_ambient: float) -> float:
        return self.isp_vac - p_ambient * self.exit_area / (self.total_massflow * G0)

    def thrust(self, p_ambient: float) -> float:
        return self.isp(p_ambient) * G0 * self.total_massflow

    @property
    def isp_sl(self) -> float:
        return self.isp(SEA_LEVEL_PRESSURE)

    @property
    def thrust_vac(self) -> float:
        return self.thrust(0.0)

    @property
    def thrust_sl(self) -> float:
        return self.thrust(SEA_LEVEL_PRESSURE)

    @property
    def propulsion_mass(self) -> float:
        return self.engine_mass + self.tvc_mass

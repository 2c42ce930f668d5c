from dataclasses import dataclass, field
from typing import Protocol

import numpy as np

from rlvopt.constants import R_AIR

# 1976 standard atmosphere layer bases up to the mesopause.
_BASE_ALTITUDES = (0.0, 11000.0, 20000.0, 32000.0, 47000.0, 51000.0, 71000.0, 84852.0)
_BASE_PRESSURES = (101325.0, 22632.06, 5474.889, 868.0187, 110.9063, 66.93887, 3.956420, 0.3734)
_BASE_TEMPERATURES = (288.15, 216.65, 216.65, 228.65, 270.65, 270.65, 214.65, 186.946)


class AtmosphereModel(Protocol):
    def pressure(self, altitude: float) -> float: ...

    def density(self, altitude: float) -> float: ...


@dataclass(frozen=True, eq=False)
class StandardAtmosphere:
    """Piecewise-exponential pressure through the standard layer bases.
    Above the last base the top layer's scale height is kept."""

    altitudes: np.ndarray = field(default_factory=lambda: np.array(_BASE_ALTITUDES))
    pressures: np.ndarray = field(default_factory=lambda: np.array(_BASE_PRESSURES))
    temperatures: np.ndarray = field(default_factory=lambda: np.array(_BASE_TEMPERATURES))

    def __post_init__(self):
        scale = np.diff(self.altitudes) / np.log(self.pressures[:-1] / self.pressures[1:])
        object.__setattr__(self, "_scale_heights", np.append(scale, scale[-1]))

    def pressure(self, altitude: float) -> float:
        h = max(altitude, 0.0)
        i = int(np.searchsorted(self.altitudes, h, side="right")) - 1
        return float(self.pressures[i] * np.exp(-(h - self.altitudes[i]) / self._scale_heights[i]))

    def temperature(self, altitude: float) -> float:
        return float(np.interp(max(altitude, 0.0), self.altitudes, self.temperatures))

    def density(self, altitude: float) -> float:
        return self.pressure(altitude) / (R_AIR * self.temperature(altitude))


@dataclass(frozen=True)
class ConstantAtmosphere:
    """Uniform pressure everywhere; zero pressure is vacuum."""

    p: float = 0.0
    rho: float = 0.0

    def pressure(self, altitude: float) -> float:
        return self.p

    def density(self, altitude: float) -> float:
        return self.rho


VACUUM = ConstantAtmosphere()

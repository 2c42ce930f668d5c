import math
from dataclasses import dataclass

from rlvopt.errors import DomainError
from rlvopt.masses.config import PayloadBayConfig


@dataclass(frozen=True)
class PayloadBay:
    payload_mass: float
    fairing_mass: float
    avionics_mass: float
    adapter_mass: float
    fairing_length: float = 0.0

    @property
    def total(self) -> float:
        return self.payload_mass + self.fairing_mass + self.avionics_mass + self.adapter_mass

    @property
    def upper_stage_payload(self) -> float:
        """Mass the upper stage accelerates; the fairing leaves with the first stage."""
        return self.total - self.fairing_mass


def fairing_area(diameter: float, config: PayloadBayConfig) -> float:
    radius = diameter / 2.0
    cylinder = math.pi * diameter * config.cylinder_length_diameters * diameter
    cone_length = config.cone_length_diameters * diameter
    return cylinder + math.pi * radius * math.hypot(radius, cone_length)


def payload_bay_mass(
    payload: float, fairing_diameter: float, config: PayloadBayConfig | None = None
) -> PayloadBay:
    config = config or PayloadBayConfig()
    if payload <= 0:
        raise DomainError(f"payload must be positive, got {payload}")
    if fairing_diameter < 0:
        raise DomainError(f"negative fairing diameter {fairing_diameter}")
    return PayloadBay(
        payload_mass=payload,
        fairing_mass=config.fairing_areal_density * fairing_area(fairing_diameter, config),
        avionics_mass=config.avionics_mass,
        adapter_mass=config.adapter_mass,
        fairing_length=(config.cylinder_length_diameters + config.cone_length_diameters)
        * fairing_diameter,
    )

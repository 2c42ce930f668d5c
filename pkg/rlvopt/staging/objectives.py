import enum
import math
from dataclasses import dataclass
from typing import Protocol

from rlvopt.constants import G0
from rlvopt.errors import DomainError


class ObjectiveKind(str, enum.Enum):
    GLOW = "glow"
    SM = "sm"
    EM = "em"


@dataclass(frozen=True)
class ObjectiveSpec:
    kind: ObjectiveKind = ObjectiveKind.GLOW
    n_reuses: int = 20

    def __post_init__(self):
        if self.n_reuses < 1:
            raise DomainError(f"n_reuses must be a positive integer, got {self.n_reuses}")

    @property
    def label(self) -> str:
        if self.kind is ObjectiveKind.EM:
            return f"EM (n={self.n_reuses})"
        return self.kind.name


class AssembledMasses(Protocol):
    glow: float
    structural_mass_first: float
    structural_mass_upper: float


def expendable_mass(m_s1: float, m_s2: float, n_reuses: int) -> float:
    return m_s2 + m_s1 / n_reuses


def objective_value(vehicle: AssembledMasses, spec: ObjectiveSpec) -> float:
    if spec.kind is ObjectiveKind.GLOW:
        return vehicle.glow
    if spec.kind is ObjectiveKind.SM:
        return vehicle.structural_mass_first + vehicle.structural_mass_upper
    if spec.kind is ObjectiveKind.EM:
        return expendable_mass(
            vehicle.structural_mass_first, vehicle.structural_mass_upper, spec.n_reuses
        )
    raise ValueError(f"Unknown objective: {spec.kind}")


def mass_after_reentry(m_s1: float, isp1: float, landing_burn_dv: float = 500.0) -> float:
    """First-stage mass entering the dense atmosphere: dry stage plus the
    propellant of the terminal landing burn."""
    return m_s1 * math.exp(landing_burn_dv / (isp1 * G0))


def ballistic_coefficient_root(m_after_reentry: float, radius: float) -> float:
    """sqrt(m / A) in kg^0.5/m for the projected area of a stage of ``radius``."""
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius}")
    return math.sqrt(m_after_reentry / (math.pi * radius**2))

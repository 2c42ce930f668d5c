"""Closed-form propellant and structural masses of the two stages.

All functions are pure; infeasible inputs raise typed errors instead of
returning NaN or negative masses.
"""

import math
from dataclasses import dataclass

from rlvopt.constants import G0
from rlvopt.errors import DomainError, InfeasibleStage, NegativeAscentPropellant
from rlvopt.masses import PayloadBay
from rlvopt.staging.config import LandingConfig


@dataclass(frozen=True)
class DeltaVAllocation:
    dv_stage1_ascent: float
    dv_stage2: float
    dv_landing: float

    def __post_init__(self):
        if self.dv_stage1_ascent <= 0 or self.dv_stage2 <= 0 or self.dv_landing < 0:
            raise DomainError(f"invalid delta-v allocation {self}")

    @property
    def dv_total(self) -> float:
        return self.dv_stage1_ascent + self.dv_stage2

    @classmethod
    def split(
        cls, dv_total: float, dv_stage1_ascent: float, landing: LandingConfig | None = None
    ) -> "DeltaVAllocation":
        return cls(
            dv_stage1_ascent=dv_stage1_ascent,
            dv_stage2=dv_total - dv_stage1_ascent,
            dv_landing=landing_dv_model(dv_stage1_ascent, landing),
        )


@dataclass(frozen=True)
class StagePropellantSplit:
    m_p_total: float
    m_p_ascent: float
    m_p_landing: float = 0.0

    def __post_init__(self):
        if min(self.m_p_total, self.m_p_ascent, self.m_p_landing) < 0:
            raise NegativeAscentPropellant(f"negative propellant mass in {self}")


def tsiolkovsky_dv(isp: float, m0: float, mf: float) -> float:
    if isp <= 0 or mf <= 0 or m0 < mf:
        raise DomainError(f"need isp > 0 and m0 >= mf > 0, got isp={isp}, m0={m0}, mf={mf}")
    return G0 * isp * math.log(m0 / mf)


def mass_ratio(dv: float, isp: float) -> float:
    if isp <= 0 or dv < 0:
        raise DomainError(f"need isp > 0 and dv >= 0, got isp={isp}, dv={dv}")
    return math.exp(dv / (G0 * isp))


def upper_stage_propellant(
    bay: PayloadBay | float, dv2: float, isp_vac2: float, eps2: float
) -> float:
    """Upper-stage propellant for a given structural coefficient. The fairing
    is jettisoned before ignition, so only the rest of the bay is payload."""
    if not 0 < eps2 < 1:
        raise DomainError(f"structural coefficient {eps2} outside (0, 1)")
    payload = bay.upper_stage_payload if isinstance(bay, PayloadBay) else float(bay)
    r = mass_ratio(dv2, isp_vac2)
    if eps2 * r >= 1:
        raise InfeasibleStage(
            f"upper stage cannot reach {dv2:.0f} m/s with eps {eps2:.4f}",
            violation=eps2 * r - 1.0,
            constraint="staging_upper",
        )
    return payload * (r - 1.0) * (1.0 - eps2) / (1.0 - eps2 * r)


def landing_dv_model(dv_stage1_ascent: float, config: LandingConfig | None = None) -> float:
    config = config or LandingConfig()
    if not config.min_ascent_dv <= dv_stage1_ascent <= config.max_ascent_dv:
        raise DomainError(
            f"first-stage delta-v {dv_stage1_ascent:.0f} m/s outside "
            f"[{config.min_ascent_dv:.0f}, {config.max_ascent_dv:.0f}] m/s"
        )
    linear = config.anchor_landing_dv + config.slope * (
        dv_stage1_ascent - config.anchor_ascent_dv
    )
    return max(config.floor_dv, linear)


def landing_structural_coefficient(dv_landing: float, isp1: float) -> float:
    """Final over initial mass of the reentry and landing burns."""
    if dv_landing < 0:
        raise DomainError(f"negative landing delta-v {dv_landing}")
    return 1.0 / mass_ratio(dv_landing, isp1)


def first_stage_structural_mass(
    m0_2: float,
    dv1_ascent: float,
    isp1_mean: float,
    eps1: float,
    eps1_landing: float,
) -> float:
    if not 0 < eps1 < 1 or not 0 < eps1_landing <= 1:
        raise DomainError(f"structural coefficients out of range: {eps1}, {eps1_landing}")
    r1 = mass_ratio(dv1_ascent, isp1_mean)
    denominator = 1.0 / eps1 - r1 / eps1_landing
    if denominator <= 0:
        raise InfeasibleStage(
            f"first stage cannot close: eps {eps1:.4f} with mass ratio {r1:.3f}",
            violation=-denominator * eps1,
            constraint="staging_first",
        )
    return m0_2 * (r1 - 1.0) / denominator


def propellant_split(m_s1: float, eps1: float, eps1_landing: float) -> StagePropellantSplit:
    if not 0 < eps1 <= 1 or not 0 < eps1_landing <= 1:
        raise DomainError(f"structural coefficients out of range: {eps1}, {eps1_landing}")
    total = m_s1 * (1.0 - eps1) / eps1
    landing = m_s1 * (1.0 - eps1_landing) / eps1_landing
    if landing >= total and landing > 0:
        raise NegativeAscentPropellant(
            f"landing propellant {landing:.0f} kg exceeds stage load {total:.0f} kg",
            violation=(landing - total) / max(total, 1.0),
        )
    return StagePropellantSplit(m_p_total=total, m_p_ascent=total - landing, m_p_landing=landing)

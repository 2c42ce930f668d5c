from dataclasses import dataclass

import pydantic
from pydantic import ConfigDict

from rlvopt.config import ConfigBase


class MissionSpec(ConfigBase):
    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str
    payload_mass_kg: float = pydantic.Field(gt=0.0)
    dv_ideal_mps: float = pydantic.Field(gt=0.0)
    # Net of the launch-site rotation credit and inclusive of all losses.
    dv_total_mps: float = pydantic.Field(gt=0.0)
    rotation_credit_mps: float = pydantic.Field(default=460.0, ge=0.0)
    target_orbit: str = ""

    @pydantic.model_validator(mode="after")
    def _check_budget(self) -> "MissionSpec":
        if self.dv_total_mps <= self.dv_ideal_mps - self.rotation_credit_mps:
            raise ValueError(
                f"dv_total_mps {self.dv_total_mps} must exceed dv_ideal_mps minus rotation credit"
            )
        return self

    def with_dv_offset(self, offset_mps: float) -> "MissionSpec":
        return MissionSpec.model_validate(
            {**self.model_dump(), "dv_total_mps": self.dv_total_mps + offset_mps}
        )


GTO = MissionSpec(
    name="GTO",
    payload_mass_kg=5000.0,
    dv_ideal_mps=10430.0,
    dv_total_mps=12000.0,
    target_orbit="geostationary transfer orbit",
)
LEO = MissionSpec(
    name="LEO",
    payload_mass_kg=15600.0,
    dv_ideal_mps=8030.0,
    dv_total_mps=9500.0,
    target_orbit="low Earth orbit",
)


def builtin_missions() -> list[MissionSpec]:
    return [GTO, LEO]


def get_mission(name: str) -> MissionSpec:
    for mission in builtin_missions():
        if mission.name.lower() == name.lower():
            return mission
    raise ValueError(f"Unknown mission: {name}")


@dataclass(frozen=True)
class LossComponent:
    name: str
    low: float
    high: float
    unit: str = "m/s"

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.low + self.high)


DEFAULT_LOSSES = (
    LossComponent("gravity", 1000.0, 1500.0),
    LossComponent("drag", 100.0, 150.0),
    LossComponent("maneuvers", 15.0, 15.0),
    LossComponent("safety_margin", 1.0, 2.0, unit="%"),
)


def loss_budget_breakdown(mission: MissionSpec) -> list[LossComponent]:
    """Documented loss ranges folded into the mission's total delta-v. These
    are report metadata; no model consumes them."""
    return list(DEFAULT_LOSSES)


def budget_total(mission: MissionSpec, losses: list[LossComponent] | None = None) -> float:
    """Reconstruct a total delta-v from the ideal one and loss midpoints."""
    losses = loss_budget_breakdown(mission) if losses is None else losses
    dv = mission.dv_ideal_mps - mission.rotation_credit_mps
    dv += sum(loss.midpoint for loss in losses if loss.unit == "m/s")
    for loss in losses:
        if loss.unit == "%":
            dv *= 1.0 + loss.midpoint / 100.0
    return dv

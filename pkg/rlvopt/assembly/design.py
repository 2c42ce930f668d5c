from dataclasses import dataclass

from rlvopt.constants import BAR
from rlvopt.propellants import EngineDesign, PropellantCombo


@dataclass(frozen=True)
class StageParameters:
    combo: PropellantCombo
    radius: float
    throat_diameter: float
    chamber_pressure: float
    expansion_ratio: float
    mixture_ratio: float

    def engine_design(self) -> EngineDesign:
        return EngineDesign(
            combo=self.combo,
            chamber_pressure=self.chamber_pressure,
            mixture_ratio=self.mixture_ratio,
            throat_diameter=self.throat_diameter,
            expansion_ratio=self.expansion_ratio,
        )

    @property
    def chamber_pressure_bar(self) -> float:
        return self.chamber_pressure / BAR


@dataclass(frozen=True)
class DesignPoint:
    """Everything the optimizer chooses for one vehicle."""

    first: StageParameters
    upper: StageParameters
    dv_stage1_ascent: float

    @property
    def combo_label(self) -> str:
        if self.first.combo == self.upper.combo:
            return self.first.combo.name
        return f"{self.first.combo.name}/{self.upper.combo.name}"

"""One GA run per grid point along a single study axis.

Failures at a grid point are recorded and the sweep moves on.
"""

import logging
from dataclasses import dataclass
from typing import Literal, Sequence

import pandas as pd

from rlvopt.assembly import AssemblyOptions, Calibration
from rlvopt.errors import RlvOptError
from rlvopt.missions import MissionSpec
from rlvopt.optimizer.ga import GAConfig, OptimizationResult, run_ga
from rlvopt.optimizer.genome import GenomeSpace
from rlvopt.propellants import PropellantCombo
from rlvopt.staging import ObjectiveKind, ObjectiveSpec

Axis = Literal["dv_allocation", "isp_offset", "dv_budget_offset", "n_reuses"]
AXES: tuple[str, ...] = ("dv_allocation", "isp_offset", "dv_budget_offset", "n_reuses")


@dataclass(frozen=True)
class SweepPoint:
    axis: str
    value: float
    result: OptimizationResult | None = None
    error: str = ""

    @property
    def feasible(self) -> bool:
        return self.result is not None

    def as_row(self) -> dict:
        row = {"axis": self.axis, "value": self.value, "feasible": self.feasible}
        if self.result is None:
            return {**row, "objective_kg": float("nan"), "error": self.error}
        vehicle = self.result.vehicle
        return {
            **row,
            "objective_kg": self.result.fitness,
            "glow_kg": vehicle.glow,
            "structural_mass_kg": vehicle.structural_mass_first + vehicle.structural_mass_upper,
            "dv1_mps": vehicle.allocation.dv_stage1_ascent,
            "n_engines1": vehicle.first_stage.n_engines,
            "error": "",
        }


SWEEP_COLUMNS = [
    "axis",
    "value",
    "feasible",
    "objective_kg",
    "glow_kg",
    "structural_mass_kg",
    "dv1_mps",
    "n_engines1",
    "error",
]


def sweep_frame(points: Sequence[SweepPoint]) -> pd.DataFrame:
    return pd.DataFrame([point.as_row() for point in points], columns=SWEEP_COLUMNS)


def _run_point(
    axis: str,
    value: float,
    mission: MissionSpec,
    combos: tuple[PropellantCombo, PropellantCombo],
    objective: ObjectiveSpec,
    config: GAConfig,
    calibration: Calibration,
) -> SweepPoint:
    if axis not in AXES:
        raise ValueError(f"Unknown sweep axis: {axis}")
    frozen = {}
    options = AssemblyOptions()
    try:
        if axis == "dv_allocation":
            frozen = {"dv1": value}
        elif axis == "isp_offset":
            options = AssemblyOptions(isp_offset=value)
        elif axis == "dv_budget_offset":
            mission = mission.with_dv_offset(value)
        elif axis == "n_reuses":
            objective = ObjectiveSpec(kind=ObjectiveKind.EM, n_reuses=int(value))
        space = GenomeSpace(*combos, frozen=frozen)
        result = run_ga(mission, objective, space, config, calibration, options)
    except RlvOptError as e:
        logging.warning(f"{axis}={value:g}: {e}")
        return SweepPoint(axis, value, error=f"{e.constraint}: {e}")
    logging.info(f"{axis}={value:g}: best {objective.label} {result.fitness / 1e3:.2f} t")
    return SweepPoint(axis, value, result)


def run_sensitivity(
    axis: Axis,
    grid: Sequence[float],
    mission: MissionSpec,
    combos: tuple[PropellantCombo, PropellantCombo],
    objective: ObjectiveSpec,
    config: GAConfig | None = None,
    calibration: Calibration | None = None,
) -> list[SweepPoint]:
    config = config or GAConfig()
    calibration = calibration or Calibration()
    return [
        _run_point(axis, float(value), mission, combos, objective, config, calibration)
        for value in grid
    ]


def sweep_allocation(
    mission: MissionSpec,
    combos: tuple[PropellantCombo, PropellantCombo],
    objective: ObjectiveSpec,
    dv1_grid: Sequence[float],
    config: GAConfig | None = None,
    calibration: Calibration | None = None,
) -> list[SweepPoint]:
    """Best objective with the first-stage delta-v frozen at each grid value."""
    return run_sensitivity(
        "dv_allocation", dv1_grid, mission, combos, objective, config, calibration
    )

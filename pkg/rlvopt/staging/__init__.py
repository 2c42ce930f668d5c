from rlvopt.staging.config import LandingConfig
from rlvopt.staging.equations import (
    DeltaVAllocation,
    StagePropellantSplit,
    first_stage_structural_mass,
    landing_dv_model,
    landing_structural_coefficient,
    mass_ratio,
    propellant_split,
    tsiolkovsky_dv,
    upper_stage_propellant,
)
from rlvopt.staging.objectives import (
    ObjectiveKind,
    ObjectiveSpec,
    ballistic_coefficient_root,
    expendable_mass,
    mass_after_reentry,
    objective_value,
)

__all__ = [
    "DeltaVAllocation",
    "LandingConfig",
    "ObjectiveKind",
    "ObjectiveSpec",
    "StagePropellantSplit",
    "ballistic_coefficient_root",
    "expendable_mass",
    "first_stage_structural_mass",
    "landing_dv_model",
    "landing_structural_coefficient",
    "mass_after_reentry",
    "mass_ratio",
    "objective_value",
    "propellant_split",
    "tsiolkovsky_dv",
    "upper_stage_propellant",
]

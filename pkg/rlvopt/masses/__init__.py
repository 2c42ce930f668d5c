from rlvopt.masses.components import (
    insulation_areal_density,
    insulation_mass,
    skirt_mass,
    tank_mass,
    tank_pressure,
    thrust_frame_mass,
)
from rlvopt.masses.config import (
    InsulationConfig,
    MassCalibration,
    PayloadBayConfig,
    StructureConfig,
    TankConfig,
)
from rlvopt.masses.geometry import StageGeometry, TankGeometry, size_stage, size_tank
from rlvopt.masses.payload import PayloadBay, fairing_area, payload_bay_mass
from rlvopt.masses.stage import StageMassBudget, assemble_stage_mass

__all__ = [
    "InsulationConfig",
    "MassCalibration",
    "PayloadBay",
    "PayloadBayConfig",
    "StageGeometry",
    "StageMassBudget",
    "StructureConfig",
    "TankConfig",
    "TankGeometry",
    "assemble_stage_mass",
    "fairing_area",
    "insulation_areal_density",
    "insulation_mass",
    "payload_bay_mass",
    "size_stage",
    "size_tank",
    "skirt_mass",
    "tank_mass",
    "tank_pressure",
    "thrust_frame_mass",
]

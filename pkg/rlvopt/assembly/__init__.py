from rlvopt.assembly.config import (
    AssemblyOptions,
    Calibration,
    ConstraintConfig,
    ConvergenceSettings,
)
from rlvopt.assembly.design import DesignPoint, StageParameters
from rlvopt.assembly.loop import assemble_vehicle, converge_first_stage, converge_upper_stage
from rlvopt.assembly.measures import MEASURES, Measure
from rlvopt.assembly.reference import (
    FALCON9,
    REFERENCE_DESIGNS,
    ComparisonRow,
    ReferenceDesign,
    ReferenceValue,
    assemble_reference,
    compare_reference,
    get_reference,
    unassembled_comparison,
)
from rlvopt.assembly.vehicle import StageResult, VehicleDesign

__all__ = [
    "FALCON9",
    "MEASURES",
    "REFERENCE_DESIGNS",
    "AssemblyOptions",
    "ComparisonRow",
    "Calibration",
    "ConstraintConfig",
    "ConvergenceSettings",
    "DesignPoint",
    "Measure",
    "ReferenceDesign",
    "ReferenceValue",
    "StageParameters",
    "StageResult",
    "VehicleDesign",
    "assemble_reference",
    "assemble_vehicle",
    "compare_reference",
    "converge_first_stage",
    "converge_upper_stage",
    "get_reference",
    "unassembled_comparison",
]

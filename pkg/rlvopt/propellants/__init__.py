from rlvopt.propellants.combos import (
    COMBOS,
    Fuel,
    PropellantCombo,
    get_combo,
    parse_combo_pair,
)
from rlvopt.propellants.config import (
    EngineGeometryConfig,
    EngineMassConfig,
    GasGeneratorAssumptions,
    IspCorrectionConfig,
    PropulsionCalibration,
)
from rlvopt.propellants.cycle import gas_generator_losses
from rlvopt.propellants.engine import (
    engine_length,
    engine_mass,
    evaluate_engine,
    isp_correction,
    isp_efficiency,
)
from rlvopt.propellants.nozzle import ideal_nozzle_performance
from rlvopt.propellants.performance import EngineDesign, EnginePerformance
from rlvopt.propellants.thermo import CombustionState, equilibrium_lookup

__all__ = [
    "COMBOS",
    "CombustionState",
    "EngineDesign",
    "EngineGeometryConfig",
    "EngineMassConfig",
    "EnginePerformance",
    "Fuel",
    "GasGeneratorAssumptions",
    "IspCorrectionConfig",
    "PropellantCombo",
    "PropulsionCalibration",
    "engine_length",
    "engine_mass",
    "equilibrium_lookup",
    "evaluate_engine",
    "gas_generator_losses",
    "get_combo",
    "ideal_nozzle_performance",
    "isp_correction",
    "isp_efficiency",
    "parse_combo_pair",
]

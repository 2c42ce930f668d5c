from rlvopt.config.load_config import (
    ConfigBase,
    dump_config,
    load_config,
    parse_config,
)
from rlvopt.config.units import (
    Angle,
    AngularRate,
    AreaDensity,
    Density,
    Duration,
    Force,
    Fraction,
    Length,
    Mass,
    MassPerForce,
    Pressure,
    SpecificHeat,
    Temperature,
    Velocity,
    parse_quantity,
)

__all__ = [
    "ConfigBase",
    "dump_config",
    "load_config",
    "parse_config",
    "parse_quantity",
    "Angle",
    "AngularRate",
    "AreaDensity",
    "Density",
    "Duration",
    "Force",
    "Fraction",
    "Length",
    "Mass",
    "MassPerForce",
    "Pressure",
    "SpecificHeat",
    "Temperature",
    "Velocity",
]

"""Unit-carrying float fields for calibration documents.

Values may be given as plain numbers (already SI) or as ``"<number> <unit>"``
strings. Strings are converted to SI during validation and a unit of the
wrong dimension is rejected.
"""

import re
from typing import Annotated, Callable

from pydantic import BeforeValidator
from scipy import constants

_UNITS: dict[str, tuple[str, float]] = {
    "Pa": ("pressure", 1.0),
    "kPa": ("pressure", constants.kilo),
    "MPa": ("pressure", constants.mega),
    "GPa": ("pressure", constants.giga),
    "bar": ("pressure", constants.bar),
    "atm": ("pressure", constants.atm),
    "kg": ("mass", 1.0),
    "t": ("mass", constants.kilo),
    "m": ("length", 1.0),
    "cm": ("length", constants.centi),
    "mm": ("length", constants.milli),
    "kg/m^2": ("areal_density", 1.0),
    "kg/m^3": ("density", 1.0),
    "g/cm^3": ("density", constants.kilo),
    "m/s": ("velocity", 1.0),
    "km/s": ("velocity", constants.kilo),
    "s": ("time", 1.0),
    "K": ("temperature", 1.0),
    "N": ("force", 1.0),
    "kN": ("force", constants.kilo),
    "MN": ("force", constants.mega),
    "kg/N": ("mass_per_force", 1.0),
    "J/(kg*K)": ("specific_heat", 1.0),
    "deg": ("angle", 1.0),
    "deg/s": ("angular_rate", 1.0),
    "%": ("fraction", 0.01),
}

_QUANTITY = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*(\S*)\s*$")


def parse_quantity(value: str | float | int, dimension: str) -> float:
    """Convert a number or ``"<number> <unit>"`` string to an SI float."""
    if isinstance(value, bool):
        raise ValueError(f"expected a {dimension} quantity, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    match = _QUANTITY.match(str(value))
    if match is None:
        raise ValueError(f"cannot parse {value!r} as a {dimension} quantity")
    number, unit = float(match.group(1)), match.group(2)
    if not unit:
        return number
    if unit not in _UNITS:
        raise ValueError(f"unknown unit {unit!r} in {value!r}")
    unit_dimension, factor = _UNITS[unit]
    if unit_dimension != dimension:
        raise ValueError(f"{value!r} is a {unit_dimension}, expected {dimension}")
    return number * factor


def _validator(dimension: str) -> Callable[[object], float]:
    def validate(value: object) -> object:
        if isinstance(value, (str, int, float)):
            return parse_quantity(value, dimension)
        return value

    return validate


Pressure = Annotated[float, BeforeValidator(_validator("pressure"))]
Mass = Annotated[float, BeforeValidator(_validator("mass"))]
Length = Annotated[float, BeforeValidator(_validator("length"))]
AreaDensity = Annotated[float, BeforeValidator(_validator("areal_density"))]
Density = Annotated[float, BeforeValidator(_validator("density"))]
Velocity = Annotated[float, BeforeValidator(_validator("velocity"))]
Duration = Annotated[float, BeforeValidator(_validator("time"))]
Temperature = Annotated[float, BeforeValidator(_validator("temperature"))]
Force = Annotated[float, BeforeValidator(_validator("force"))]
MassPerForce = Annotated[float, BeforeValidator(_validator("mass_per_force"))]
SpecificHeat = Annotated[float, BeforeValidator(_validator("specific_heat"))]
Angle = Annotated[float, BeforeValidator(_validator("angle"))]
AngularRate = Annotated[float, BeforeValidator(_validator("angular_rate"))]
Fraction = Annotated[float, BeforeValidator(_validator("fraction"))]

"""Equilibrium combustion properties from the bundled tables.

The tables hold NASA CEA c*, gamma and chamber temperature on a regular grid
of chamber pressure (bar) and mixture ratio per fuel. Lookups are bilinear.
When the table has not been bundled yet it is computed with CEA on first use.
"""

import functools
import hashlib
import importlib.resources
import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy.interpolate import RegularGridInterpolator

from rlvopt.constants import BAR
from rlvopt.errors import OutOfTableRange
from rlvopt.propellants.combos import Fuel, PropellantCombo

TABLE_NAME = "thermo_tables_v2.csv"
_VALUE_COLUMNS = ["c_star_mps", "gamma", "t_c_K"]


@dataclass(frozen=True)
class CombustionState:
    chamber_pressure: float
    mixture_ratio: float
    c_star: float
    gamma: float
    combustion_temperature: float


def _table_resource():
    return importlib.resources.files("rlvopt.propellants") / "data" / TABLE_NAME


def table_is_bundled() -> bool:
    return _table_resource().is_file()


@functools.lru_cache(maxsize=None)
def load_table() -> pd.DataFrame:
    if table_is_bundled():
        with _table_resource().open("r") as f:
            return pd.read_csv(f)
    logging.warning(f"{TABLE_NAME} is not bundled, computing it with CEA")
    from rlvopt.propellants.cea import build_table

    return build_table()


def table_checksum() -> str:
    return hashlib.sha256(_table_resource().read_bytes()).hexdigest()


def recorded_checksum() -> str:
    resource = importlib.resources.files("rlvopt.propellants") / "data"
    return (resource / f"{TABLE_NAME}.sha256").read_text().split()[0]


@functools.lru_cache(maxsize=None)
def _grid(fuel: Fuel) -> tuple[np.ndarray, np.ndarray, RegularGridInterpolator]:
    table = load_table()
    rows = table[table["combo"] == fuel.value].sort_values(["p_c_bar", "rof"])
    if rows.empty:
        raise OutOfTableRange(f"no thermochemistry rows for {fuel.value}")
    pressures = np.unique(rows["p_c_bar"].to_numpy())
    ratios = np.unique(rows["rof"].to_numpy())
    values = rows[_VALUE_COLUMNS].to_numpy().reshape(len(pressures), len(ratios), 3)
    interpolator = RegularGridInterpolator(
        (pressures, ratios), values, method="linear", bounds_error=False
    )
    return pressures, ratios, interpolator


def grid_nodes(fuel: Fuel) -> tuple[np.ndarray, np.ndarray]:
    pressures, ratios, _ = _grid(fuel)
    return pressures, ratios


def equilibrium_lookup(
    combo: PropellantCombo, chamber_pressure: float, mixture_ratio: float
) -> CombustionState:
    pressures, ratios, interpolator = _grid(combo.fuel)
    p_bar = chamber_pressure / BAR
    if not pressures[0] <= p_bar <= pressures[-1]:
        raise OutOfTableRange(
            f"chamber pressure {p_bar:g} bar outside table [{pressures[0]:g}, {pressures[-1]:g}]",
            violation=min(abs(p_bar - pressures[0]), abs(p_bar - pressures[-1]))
            / (pressures[-1] - pressures[0]),
        )
    if not ratios[0] <= mixture_ratio <= ratios[-1]:
        raise OutOfTableRange(
            f"mixture ratio {mixture_ratio:g} outside table [{ratios[0]:g}, {ratios[-1]:g}] for {combo.name}",
            violation=min(abs(mixture_ratio - ratios[0]), abs(mixture_ratio - ratios[-1]))
            / (ratios[-1] - ratios[0]),
        )
    c_star, gamma, t_c = interpolator([[p_bar, mixture_ratio]])[0]
    return CombustionState(
        chamber_pressure=chamber_pressure,
        mixture_ratio=mixture_ratio,
        c_star=float(c_star),
        gamma=float(gamma),
        combustion_temperature=float(t_c),
    )

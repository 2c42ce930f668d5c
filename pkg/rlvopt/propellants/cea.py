"""Chamber thermochemistry from NASA CEA through rocketcea.

Builds the c*, gamma and chamber-temperature grid that ``thermo`` looks up:
ten chamber pressures from 20 to 200 bar by sixteen mixture ratios spanning
each fuel's design bounds.
"""

import functools
import hashlib
import logging
from pathlib import Path

import numpy as np
import pandas as pd
from rocketcea.cea_obj_w_units import CEA_Obj

from rlvopt.propellants.combos import COMBOS, Fuel

TABLE_COLUMNS = ["combo", "p_c_bar", "rof", "c_star_mps", "gamma", "t_c_K"]
PRESSURES_BAR = np.arange(20.0, 201.0, 20.0)
N_MIXTURE_RATIOS = 16
CEA_FUEL_NAMES = {Fuel.LH2: "LH2", Fuel.RP1: "RP1", Fuel.LCH4: "CH4"}
# Chamber properties do not depend on the nozzle; CEA still wants an area ratio.
_NOMINAL_EXPANSION_RATIO = 40.0
_DECIMALS = {"p_c_bar": 1, "rof": 6, "c_star_mps": 3, "gamma": 6, "t_c_K": 2}


@functools.lru_cache(maxsize=None)
def _cea(fuel: Fuel) -> CEA_Obj:
    return CEA_Obj(
        oxName="LOX",
        fuelName=CEA_FUEL_NAMES[fuel],
        cstar_units="m/sec",
        pressure_units="bar",
        temperature_units="K",
    )


def mixture_ratios(fuel: Fuel) -> np.ndarray:
    low, high = COMBOS[fuel].rof_bounds
    return np.round(np.linspace(low, high, N_MIXTURE_RATIOS), _DECIMALS["rof"])


def fuel_table(fuel: Fuel) -> pd.DataFrame:
    cea = _cea(fuel)
    rows = []
    for p_c in PRESSURES_BAR:
        for rof in mixture_ratios(fuel):
            _, gamma = cea.get_Chamber_MolWt_gamma(Pc=p_c, MR=rof, eps=_NOMINAL_EXPANSION_RATIO)
            rows.append(
                {
                    "combo": fuel.value,
                    "p_c_bar": p_c,
                    "rof": rof,
                    "c_star_mps": cea.get_Cstar(Pc=p_c, MR=rof),
                    "gamma": gamma,
                    "t_c_K": cea.get_Tcomb(Pc=p_c, MR=rof),
                }
            )
    return pd.DataFrame(rows, columns=TABLE_COLUMNS)


def build_table() -> pd.DataFrame:
    """All fuels, rounded to the precision the bundled CSV stores."""
    table = pd.concat([fuel_table(fuel) for fuel in Fuel], ignore_index=True)
    return table.round(_DECIMALS)


def write_table(output_dir: Path, name: str) -> Path:
    table = build_table()
    path = output_dir / name
    table.to_csv(path, index=False, float_format="%.6f")
    digest = hashlib.sha256(path.read_bytes()).hexdigest()
    (output_dir / f"{name}.sha256").write_text(f"{digest}  {name}\n")
    logging.info(f"Wrote {path} ({len(table)} rows, sha256 {digest})")
    return path

"""Named read-outs of an assembled vehicle in report units (t, m, kN, s)."""

from dataclasses import dataclass
from typing import Callable

from rlvopt.assembly.vehicle import VehicleDesign
from rlvopt.staging import expendable_mass


@dataclass(frozen=True)
class Measure:
    label: str
    unit: str
    read: Callable[[VehicleDesign], float]
    # Decimal places when printed.
    digits: int = 1


def _t(kg: float) -> float:
    return kg / 1000.0


MEASURES: dict[str, Measure] = {
    "payload_bay": Measure("Payload bay mass", "t", lambda v: _t(v.payload_bay.total)),
    "fairing_length": Measure("Fairing length", "m", lambda v: v.payload_bay.fairing_length),
    "m_s2": Measure("Upper stage structural mass", "t", lambda v: _t(v.upper_stage.structural_mass)),
    "m_p2": Measure("Upper stage propellant mass", "t", lambda v: _t(v.upper_stage.propellant_mass)),
    "eps2": Measure(
        "Upper stage structural coefficient",
        "-",
        lambda v: v.upper_stage.structural_coefficient,
        digits=4,
    ),
    "diameter2": Measure("Upper stage diameter", "m", lambda v: 2.0 * v.design.upper.radius, 2),
    "length2": Measure("Upper stage length", "m", lambda v: v.upper_stage.length),
    "m_s1": Measure("First stage structural mass", "t", lambda v: _t(v.first_stage.structural_mass)),
    "m_p1": Measure("First stage propellant mass", "t", lambda v: _t(v.first_stage.propellant_mass)),
    "m_landing": Measure(
        "Landing propellant mass", "t", lambda v: _t(v.first_stage.propellant.m_p_landing)
    ),
    "eps1": Measure(
        "First stage structural coefficient",
        "-",
        lambda v: v.first_stage.structural_coefficient,
        digits=4,
    ),
    "diameter1": Measure("First stage diameter", "m", lambda v: 2.0 * v.design.first.radius, 2),
    "length1": Measure("First stage length", "m", lambda v: v.first_stage.length),
    "n_engines2": Measure("Upper stage engines", "-", lambda v: v.upper_stage.n_engines, 0),
    "thrust_vac2": Measure("Upper stage vacuum thrust", "kN", lambda v: v.upper_stage.thrust_vac / 1e3),
    "isp_vac2": Measure("Upper stage vacuum Isp", "s", lambda v: v.upper_stage.performance.isp_vac),
    "burn_time2": Measure("Upper stage burn time", "s", lambda v: v.upper_stage.rated_burn_time),
    "pc2": Measure("Upper stage chamber pressure", "bar", lambda v: v.design.upper.chamber_pressure_bar),
    "rof2": Measure("Upper stage mixture ratio", "-", lambda v: v.design.upper.mixture_ratio, 2),
    "nozzle2": Measure("Upper stage expansion ratio", "-", lambda v: v.design.upper.expansion_ratio),
    "n_engines1": Measure("First stage engines", "-", lambda v: v.first_stage.n_engines, 0),
    "thrust_vac1": Measure("First stage vacuum thrust", "kN", lambda v: v.first_stage.thrust_vac / 1e3),
    "thrust_sl1": Measure("First stage sea-level thrust", "kN", lambda v: v.first_stage.thrust_sl / 1e3),
    "isp_vac1": Measure("First stage vacuum Isp", "s", lambda v: v.first_stage.performance.isp_vac),
    "isp_sl1": Measure("First stage sea-level Isp", "s", lambda v: v.first_stage.performance.isp_sl),
    "isp_mean1": Measure("First stage mean ascent Isp", "s", lambda v: v.first_stage.design_isp),
    "burn_time1": Measure("First stage burn time", "s", lambda v: v.first_stage.rated_burn_time),
    "pc1": Measure("First stage chamber pressure", "bar", lambda v: v.design.first.chamber_pressure_bar),
    "rof1": Measure("First stage mixture ratio", "-", lambda v: v.design.first.mixture_ratio, 2),
    "nozzle1": Measure("First stage expansion ratio", "-", lambda v: v.design.first.expansion_ratio),
    "dv1": Measure("First stage ascent delta-v", "m/s", lambda v: v.allocation.dv_stage1_ascent, 0),
    "dv2": Measure("Upper stage delta-v", "m/s", lambda v: v.allocation.dv_stage2, 0),
    "dv_landing": Measure("Reentry and landing delta-v", "m/s", lambda v: v.allocation.dv_landing, 0),
    "length": Measure("Total length", "m", lambda v: v.total_length),
    "length_to_diameter": Measure("Length to diameter", "-", lambda v: v.length_to_diameter, 2),
    "liftoff_acceleration": Measure("Liftoff acceleration", "g", lambda v: v.liftoff_acceleration, 3),
    "upper_stage_acceleration": Measure(
        "Upper stage ignition acceleration", "g", lambda v: v.upper_stage_acceleration, 3
    ),
    "ballistic_root": Measure(
        "Root of mass over area after reentry burn", "t^0.5/m", lambda v: v.ballistic_root, 3
    ),
    "structural_mass": Measure(
        "Total structural mass",
        "t",
        lambda v: _t(v.structural_mass_first + v.structural_mass_upper),
    ),
    "expendable_mass": Measure(
        "Expendable mass (20 reuses)",
        "t",
        lambda v: _t(expendable_mass(v.structural_mass_first, v.structural_mass_upper, 20)),
        digits=2,
    ),
    "glow": Measure("GLOW", "t", lambda v: _t(v.glow)),
}

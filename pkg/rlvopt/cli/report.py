"""Vehicle and validation reports.

Every report is built once as plain data; the text form and the JSON mirror
are both rendered from it, so they always agree.
"""

import json
import math
from dataclasses import dataclass, field

import fsspec

from rlvopt.assembly import MEASURES, ComparisonRow, VehicleDesign
from rlvopt.errors import RlvOptError
from rlvopt.missions import MissionSpec, loss_budget_breakdown
from rlvopt.staging import ObjectiveSpec, objective_value

SECTIONS: dict[str, list[str]] = {
    "Mass and geometry": [
        "payload_bay",
        "fairing_length",
        "m_s2",
        "m_p2",
        "eps2",
        "diameter2",
        "length2",
        "m_s1",
        "m_p1",
        "m_landing",
        "eps1",
        "diameter1",
        "length1",
    ],
    "Propulsion": [
        "n_engines2",
        "thrust_vac2",
        "isp_vac2",
        "burn_time2",
        "pc2",
        "rof2",
        "nozzle2",
        "n_engines1",
        "thrust_vac1",
        "thrust_sl1",
        "isp_vac1",
        "isp_sl1",
        "isp_mean1",
        "burn_time1",
        "pc1",
        "rof1",
        "nozzle1",
    ],
    "Totals": [
        "dv1",
        "dv2",
        "dv_landing",
        "length",
        "length_to_diameter",
        "structural_mass",
        "expendable_mass",
        "liftoff_acceleration",
        "upper_stage_acceleration",
        "ballistic_root",
        "glow",
    ],
}

_LABEL_WIDTH = 44


@dataclass
class Report:
    title: str
    data: dict
    text: str
    passed: bool = True
    files: list[str] = field(default_factory=list)

    def write(self, output_dir: str):
        fs, root = fsspec.core.url_to_fs(output_dir)
        fs.makedirs(root, exist_ok=True)
        for name, content in (
            ("report.txt", self.text),
            ("report.json", json.dumps(self.data, indent=2)),
        ):
            path = f"{root.rstrip('/')}/{name}"
            with fs.open(path, "w") as f:
                f.write(content)
            self.files.append(path)


def _value(field_name: str, vehicle: VehicleDesign) -> float:
    measure = MEASURES[field_name]
    value = float(measure.read(vehicle))
    if measure.digits == 0:
        return int(round(value))
    return round(value, measure.digits)


def dv_budget_data(mission: MissionSpec) -> dict:
    return {
        "ideal_mps": mission.dv_ideal_mps,
        "rotation_credit_mps": mission.rotation_credit_mps,
        "total_mps": mission.dv_total_mps,
        "losses": [
            {"name": loss.name, "low": loss.low, "high": loss.high, "unit": loss.unit}
            for loss in loss_budget_breakdown(mission)
        ],
    }


def vehicle_data(vehicle: VehicleDesign, objective: ObjectiveSpec | None = None) -> dict:
    data = {
        "mission": vehicle.mission.name,
        "combo": vehicle.design.combo_label,
        "feasible": vehicle.feasible,
        "violations": dict(vehicle.violations),
        "flags": list(vehicle.flags),
        "sections": {
            section: [
                {
                    "field": name,
                    "label": MEASURES[name].label,
                    "unit": MEASURES[name].unit,
                    "value": _value(name, vehicle),
                }
                for name in names
            ]
            for section, names in SECTIONS.items()
        },
        "dv_budget": dv_budget_data(vehicle.mission),
    }
    if objective is not None:
        data["objective"] = {
            "label": objective.label,
            "unit": "t",
            "value": round(objective_value(vehicle, objective) / 1000.0, 3),
        }
    return data


def _format_value(value: float, unit: str) -> str:
    unit = "" if unit == "-" else f" {unit}"
    return f"{value}{unit}"


def _format_dv_budget(budget: dict) -> list[str]:
    lines = ["Delta-v budget"]
    lines.append(f"  {'ideal':<{_LABEL_WIDTH}}{budget['ideal_mps']:g} m/s")
    lines.append(f"  {'launch-site rotation credit':<{_LABEL_WIDTH}}-{budget['rotation_credit_mps']:g} m/s")
    for loss in budget["losses"]:
        span = f"{loss['low']:g}" if loss["low"] == loss["high"] else f"{loss['low']:g}-{loss['high']:g}"
        lines.append(f"  {loss['name'].replace('_', ' ') + ' loss':<{_LABEL_WIDTH}}{span} {loss['unit']}")
    lines.append(f"  {'total':<{_LABEL_WIDTH}}{budget['total_mps']:g} m/s")
    return lines


def format_vehicle(data: dict) -> str:
    lines = [f"{data['combo']} launch vehicle, {data['mission']} mission"]
    if "objective" in data:
        objective = data["objective"]
        lines.append(f"Objective {objective['label']}: {objective['value']} {objective['unit']}")
    for section, rows in data["sections"].items():
        lines.append("")
        lines.append(section)
        for row in rows:
            lines.append(f"  {row['label']:<{_LABEL_WIDTH}}{_format_value(row['value'], row['unit'])}")
    lines.append("")
    lines.extend(_format_dv_budget(data["dv_budget"]))
    if data["flags"]:
        lines.append("")
        lines.append(f"Flags: {', '.join(data['flags'])}")
    if data["violations"]:
        lines.append("")
        lines.append("Constraint violations (reported, not enforced):")
        for constraint, violation in data["violations"].items():
            lines.append(f"  {constraint}: {violation:.3f}")
    return "\n".join(lines) + "\n"


def vehicle_report(
    vehicle: VehicleDesign, objective: ObjectiveSpec | None = None, title: str = "evaluate"
) -> Report:
    data = vehicle_data(vehicle, objective)
    return Report(title=title, data=data, text=format_vehicle(data), passed=vehicle.feasible)


def _verdict(passed: bool | None) -> str:
    return {True: "pass", False: "FAIL", None: ""}[passed]


def validation_report(
    name: str,
    rows: list[ComparisonRow],
    vehicle: VehicleDesign | None,
    error: RlvOptError | None = None,
) -> Report:
    """Compare a reference vehicle with its published values.

    ``vehicle`` is None when the reference could not be assembled; ``error``
    then names the stage or constraint that broke and every toleranced field
    fails.
    """
    passed = error is None and all(row.passed is not False for row in rows)
    data = {
        "reference": name,
        "passed": passed,
        "error": None if error is None else {"constraint": error.constraint, "message": str(error)},
        "rows": [
            {
                "field": row.field,
                "label": row.label,
                "unit": row.unit,
                "computed": None if math.isnan(row.value) else round(row.value, MEASURES[row.field].digits),
                "optimizer_reference": row.expected,
                "real": row.real,
                "tolerance": row.tolerance,
                "verdict": _verdict(row.passed),
            }
            for row in rows
        ],
        "vehicle": None if vehicle is None else vehicle_data(vehicle),
    }
    header = (
        f"  {'':<{_LABEL_WIDTH - 2}}{'unit':>8}{'computed':>11}{'reference':>11}"
        f"{'real':>9}  {'tolerance':<10}verdict"
    )
    lines = [f"Validation against {name}", "", header]
    for row in data["rows"]:
        computed = "-" if row["computed"] is None else f"{row['computed']:g}"
        real = "" if row["real"] is None else f"{row['real']:g}"
        lines.append(
            f"  {row['label']:<{_LABEL_WIDTH - 2}}{row['unit']:>8}{computed:>11}"
            f"{row['optimizer_reference']:>11g}{real:>9}  {row['tolerance']:<10}{row['verdict']}"
        )
    lines.append("")
    if error is not None:
        lines.append(f"Assembly failed at {error.constraint}: {error}")
    lines.append(f"Result: {'PASS' if passed else 'FAIL'}")
    if data["vehicle"] is not None:
        lines.append("")
        lines.append(format_vehicle(data["vehicle"]))
    return Report(title="validate", data=data, text="\n".join(lines), passed=passed)

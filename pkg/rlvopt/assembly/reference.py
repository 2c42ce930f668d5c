"""Published vehicles used for validation and regression.

Each reference pairs a fixed design point with the values reported for it.
Values are kept in report units (t, m, kN, s). A field with a tolerance is
scored pass/fail; the others are listed for comparison only.
"""

import math
from dataclasses import dataclass

from rlvopt.assembly.config import AssemblyOptions, Calibration
from rlvopt.assembly.design import DesignPoint, StageParameters
from rlvopt.assembly.loop import assemble_vehicle
from rlvopt.assembly.measures import MEASURES, Measure
from rlvopt.assembly.vehicle import VehicleDesign
from rlvopt.constants import BAR
from rlvopt.missions import GTO, MissionSpec
from rlvopt.propellants import get_combo
from rlvopt.staging import ObjectiveKind, ObjectiveSpec
from rlvopt.trajectory import AtmosphereModel


@dataclass(frozen=True)
class ReferenceValue:
    field: str
    expected: float
    # The flown vehicle, where it differs from the expected model result.
    real: float | None = None
    tolerance: float | None = None
    relative: bool = False

    @property
    def measure(self) -> Measure:
        return MEASURES[self.field]

    def deviation(self, value: float) -> float:
        if self.relative:
            return abs(value - self.expected) / abs(self.expected)
        return abs(value - self.expected)

    def check(self, value: float) -> bool | None:
        """None when the field is informational."""
        if self.tolerance is None:
            return None
        return self.deviation(value) <= self.tolerance

    @property
    def tolerance_label(self) -> str:
        if self.tolerance is None:
            return ""
        if self.relative:
            return f"±{100 * self.tolerance:g}%"
        return f"±{self.tolerance:g} {self.measure.unit}".rstrip(" -")


@dataclass(frozen=True)
class ReferenceDesign:
    name: str
    description: str
    design: DesignPoint
    mission: MissionSpec
    values: tuple[ReferenceValue, ...]
    objective: ObjectiveSpec = ObjectiveSpec()
    engine_count: int | None = None

    def value(self, field: str) -> ReferenceValue:
        for value in self.values:
            if value.field == field:
                return value
        raise KeyError(field)


def _stage(fuel: str, radius, throat, pc_bar, eps, rof) -> StageParameters:
    return StageParameters(
        combo=get_combo(fuel),
        radius=radius,
        throat_diameter=throat,
        chamber_pressure=pc_bar * BAR,
        expansion_ratio=eps,
        mixture_ratio=rof,
    )


FALCON9 = ReferenceDesign(
    name="falcon9",
    description="Falcon 9 (GTO, 5 t) with the first stage recovered",
    design=DesignPoint(
        first=_stage("RP1", 1.83, 0.265, 97.0, 16.0, 2.36),
        upper=_stage("RP1", 1.83, 0.28, 97.0, 165.0, 2.36),
        dv_stage1_ascent=3500.0,
    ),
    mission=GTO,
    engine_count=9,
    values=(
        ReferenceValue("payload_bay", 7.4, real=7.4),
        ReferenceValue("fairing_length", 10.7, real=13.2),
        ReferenceValue("m_s2", 4.9, real=4.5),
        ReferenceValue("m_p2", 113.7, real=111.5, tolerance=0.10, relative=True),
        ReferenceValue("eps2", 0.041, real=0.039, tolerance=0.005),
        ReferenceValue("length2", 20.5, real=16.0),
        ReferenceValue("m_s1", 27.4, real=27.2),
        ReferenceValue("m_p1", 436.6, real=418.7, tolerance=0.10, relative=True),
        ReferenceValue("m_landing", 26.6, real=25.0, tolerance=0.15, relative=True),
        ReferenceValue("eps1", 0.059, real=0.061, tolerance=0.005),
        ReferenceValue("length1", 48.3, real=40.9),
        ReferenceValue("thrust_vac2", 1074.0, real=981.0),
        ReferenceValue("isp_vac2", 351.0, real=348.0),
        ReferenceValue("burn_time2", 364.0, real=397.0),
        ReferenceValue("thrust_vac1", 8536.0, real=8227.0),
        ReferenceValue("thrust_sl1", 7770.0, real=7607.0),
        ReferenceValue("isp_vac1", 310.0, real=312.0, tolerance=2.0),
        ReferenceValue("isp_sl1", 282.0, real=283.0, tolerance=2.0),
        ReferenceValue("burn_time1", 156.0, real=162.0, tolerance=10.0),
        ReferenceValue("length", 80.6, real=70.1),
        ReferenceValue("glow", 589.9, real=569.3, tolerance=0.05, relative=True),
    ),
)

LH2_GLOW = ReferenceDesign(
    name="lh2_glow",
    description="LOX/LH2 on both stages, GLOW-optimal",
    design=DesignPoint(
        first=_stage("LH2", 2.2, 0.26, 115.0, 25.0, 5.5),
        upper=_stage("LH2", 1.9, 0.245, 115.0, 200.0, 6.5),
        dv_stage1_ascent=2900.0,
    ),
    mission=GTO,
    values=(
        ReferenceValue("m_s1", 27.4, tolerance=0.10, relative=True),
        ReferenceValue("m_s2", 9.1),
        ReferenceValue("isp_vac2", 450.0, tolerance=2.0),
        ReferenceValue("glow", 327.8, tolerance=0.15, relative=True),
    ),
)

LH2_EM = ReferenceDesign(
    name="lh2_em",
    description="LOX/LH2 on both stages, expendable-mass-optimal",
    design=DesignPoint(
        first=_stage("LH2", 2.5, 0.27, 135.0, 30.0, 6.4),
        upper=_stage("LH2", 1.9, 0.23, 85.0, 200.0, 7.0),
        dv_stage1_ascent=4300.0,
    ),
    mission=GTO,
    objective=ObjectiveSpec(kind=ObjectiveKind.EM, n_reuses=20),
    values=(
        ReferenceValue("expendable_mass", 7.5, tolerance=0.10, relative=True),
        ReferenceValue("m_s1", 38.3),
        ReferenceValue("glow", 443.9, tolerance=0.10, relative=True),
    ),
)

RP1_GLOW = ReferenceDesign(
    name="rp1_glow",
    description="LOX/RP-1 on both stages, GLOW-optimal",
    design=DesignPoint(
        first=_stage("RP1", 2.1, 0.31, 110.0, 25.0, 2.1),
        upper=_stage("RP1", 2.0, 0.32, 110.0, 200.0, 2.3),
        dv_stage1_ascent=3000.0,
    ),
    mission=GTO,
    values=(
        ReferenceValue("n_engines1", 6.0, tolerance=0.0),
        ReferenceValue("m_s1", 23.0),
        ReferenceValue("glow", 530.6, tolerance=0.10, relative=True),
    ),
)

REFERENCE_DESIGNS = {ref.name: ref for ref in (FALCON9, LH2_GLOW, LH2_EM, RP1_GLOW)}


def get_reference(name: str) -> ReferenceDesign:
    try:
        return REFERENCE_DESIGNS[name.lower()]
    except KeyError:
        raise ValueError(f"Unknown reference design: {name}") from None


def assemble_reference(
    reference: ReferenceDesign,
    calibration: Calibration | None = None,
    atmosphere: AtmosphereModel | None = None,
) -> VehicleDesign:
    """Assemble a reference vehicle with constraints reported, not enforced."""
    options = AssemblyOptions(
        enforce_constraints=False, engine_count_override=reference.engine_count
    )
    return assemble_vehicle(reference.design, reference.mission, calibration, options, atmosphere)


@dataclass(frozen=True)
class ComparisonRow:
    field: str
    label: str
    unit: str
    value: float
    expected: float
    real: float | None
    tolerance: str
    passed: bool | None


def _row(ref: ReferenceValue, value: float, passed: bool | None) -> ComparisonRow:
    return ComparisonRow(
        field=ref.field,
        label=ref.measure.label,
        unit=ref.measure.unit,
        value=value,
        expected=ref.expected,
        real=ref.real,
        tolerance=ref.tolerance_label,
        passed=passed,
    )


def compare_reference(reference: ReferenceDesign, vehicle: VehicleDesign) -> list[ComparisonRow]:
    rows = []
    for ref in reference.values:
        value = ref.measure.read(vehicle)
        rows.append(_row(ref, value, ref.check(value)))
    return rows


def unassembled_comparison(reference: ReferenceDesign) -> list[ComparisonRow]:
    """Rows for a reference that could not be assembled: every toleranced field fails."""
    return [
        _row(ref, math.nan, None if ref.tolerance is None else False) for ref in reference.values
    ]

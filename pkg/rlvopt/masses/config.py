import pydantic

from rlvopt.config import (
    AreaDensity,
    ConfigBase,
    Density,
    Fraction,
    Length,
    Mass,
    MassPerForce,
    Pressure,
)


class TankConfig(ConfigBase):
    ullage_pressure: Pressure = pydantic.Field(default=3.5e5, gt=0.0)
    # Hydrostatic head is evaluated at this axial acceleration, in g.
    axial_load_factor: float = pydantic.Field(default=2.5, ge=0.0)
    safety_factor: float = pydantic.Field(default=1.5, ge=1.0)
    material_strength: Pressure = pydantic.Field(default=400e6, gt=0.0)
    material_density: Density = pydantic.Field(default=2700.0, gt=0.0)
    min_gauge: Length = pydantic.Field(default=1.5e-3, ge=0.0)
    ullage_fraction: Fraction = pydantic.Field(default=0.05, ge=0.0)
    reinforcement_first_stage: Fraction = 0.30
    reinforcement_upper_stage: Fraction = 0.20


class InsulationConfig(ConfigBase):
    areal_density: dict[str, AreaDensity] = pydantic.Field(
        default={"LOX": 1.2, "LH2": 4.0, "LCH4": 1.2, "RP1": 0.0},
        description="Insulation mass per wetted tank area, keyed by propellant.",
    )


class StructureConfig(ConfigBase):
    skirt_areal_density: AreaDensity = 15.0
    thrust_frame_per_newton: MassPerForce = 2.55e-4
    equipment_first_stage: Mass = 0.0
    equipment_upper_stage: Mass = 985.0
    landing_gear_fraction: Fraction = 0.15
    margin_first_stage: Fraction = 0.15
    margin_upper_stage: Fraction = 0.10


class PayloadBayConfig(ConfigBase):
    fairing_areal_density: AreaDensity = 20.0
    cylinder_length_diameters: float = 1.5
    cone_length_diameters: float = 1.4
    avionics_mass: Mass = 300.0
    adapter_mass: Mass = 210.0


class MassCalibration(ConfigBase):
    tanks: TankConfig = TankConfig()
    insulation: InsulationConfig = InsulationConfig()
    structure: StructureConfig = StructureConfig()
    payload_bay: PayloadBayConfig = PayloadBayConfig()

import pydantic

from rlvopt.config import (
    Angle,
    ConfigBase,
    Duration,
    Force,
    Fraction,
    Mass,
    Pressure,
    Temperature,
)
from rlvopt.propellants.combos import Fuel


class GasGeneratorAssumptions(ConfigBase):
    max_turbine_pressure_ratio: float = pydantic.Field(default=20.0, gt=1.0, le=20.0)
    turbine_efficiency: Fraction = pydantic.Field(default=0.5, gt=0.0, le=1.0)
    pump_efficiency: Fraction = pydantic.Field(default=0.5, gt=0.0, le=1.0)
    gg_temperature: Temperature = pydantic.Field(default=900.0, gt=0.0)
    # Pump discharge pressure as a multiple of chamber pressure.
    pump_pressure_factor: float = pydantic.Field(default=1.2, ge=0.0)
    # Exhaust velocity of the dumped turbine gas relative to the core flow.
    gg_velocity_credit: Fraction = pydantic.Field(default=0.1, ge=0.0, le=1.0)
    max_massflow_fraction: Fraction = pydantic.Field(default=0.2, gt=0.0, lt=1.0)


class IspCorrectionConfig(ConfigBase):
    base_efficiency: dict[Fuel, float] = pydantic.Field(
        default={Fuel.RP1: 0.9566, Fuel.LH2: 0.9716, Fuel.LCH4: 0.9761},
        description="Efficiency at the reference chamber pressure.",
    )
    pressure_slope: float = pydantic.Field(
        default=0.01, description="Efficiency change per e-fold of chamber pressure."
    )
    reference_pressure: Pressure = pydantic.Field(default=100e5, gt=0.0)
    min_efficiency: float = 0.90
    max_efficiency: float = 1.0


class EngineMassConfig(ConfigBase):
    coefficient: dict[Fuel, float] = pydantic.Field(
        default={Fuel.RP1: 0.0152, Fuel.LH2: 0.040, Fuel.LCH4: 0.022},
        description="a in m = a * F_vac^b + c * expansion_ratio, F in N.",
    )
    exponent: float = pydantic.Field(default=0.75, gt=0.0, lt=1.0)
    nozzle_coefficient: Mass = pydantic.Field(default=0.5, ge=0.0)
    tvc_fraction: Fraction = 0.15
    min_thrust: Force = 100e3
    max_thrust: Force = 3e6


class EngineGeometryConfig(ConfigBase):
    # Bell length relative to an equivalent conical nozzle.
    bell_fraction: Fraction = 0.8
    cone_half_angle: Angle = 15.0
    chamber_length_throat_diameters: float = 6.0


class PropulsionCalibration(ConfigBase):
    gas_generator: GasGeneratorAssumptions = GasGeneratorAssumptions()
    isp_correction: IspCorrectionConfig = IspCorrectionConfig()
    engine_mass: EngineMassConfig = EngineMassConfig()
    engine_geometry: EngineGeometryConfig = EngineGeometryConfig()
    isp_min: Duration = 200.0
    isp_max: Duration = 480.0
    # Summerfield criterion, exit pressure relative to ambient.
    separation_pressure_ratio: Fraction = 0.3

import pydantic

from rlvopt.config import ConfigBase, Duration
from rlvopt.masses import MassCalibration
from rlvopt.propellants import PropulsionCalibration
from rlvopt.staging import LandingConfig
from rlvopt.trajectory import AccelerationLimits, GravityTurnConfig


class ConvergenceSettings(ConfigBase):
    eps_tolerance: float = pydantic.Field(default=1e-4, gt=0.0)
    isp_tolerance: Duration = pydantic.Field(default=0.1, gt=0.0)
    max_iterations: int = pydantic.Field(default=50, ge=1)
    initial_eps1: float = pydantic.Field(default=0.06, gt=0.0, lt=1.0)
    initial_eps2: float = pydantic.Field(default=0.05, gt=0.0, lt=1.0)
    # Halve the update step whenever the residual flips sign without halving.
    relaxation: bool = True


class ConstraintConfig(ConfigBase):
    acceleration: AccelerationLimits = AccelerationLimits()
    max_length_to_diameter: float = pydantic.Field(default=20.0, gt=0.0)
    min_engines_first_stage: int = pydantic.Field(default=5, ge=1)
    max_engines_first_stage: int = pydantic.Field(default=15, ge=1)
    engines_upper_stage: int = pydantic.Field(default=1, ge=1)


class Calibration(ConfigBase):
    """Every tunable model constant, grouped by the module that consumes it."""

    version: str = "v2"
    propulsion: PropulsionCalibration = PropulsionCalibration()
    masses: MassCalibration = MassCalibration()
    landing: LandingConfig = LandingConfig()
    gravity_turn: GravityTurnConfig = GravityTurnConfig()
    convergence: ConvergenceSettings = ConvergenceSettings()
    constraints: ConstraintConfig = ConstraintConfig()


class AssemblyOptions(ConfigBase):
    """Per-run switches that are not model constants."""

    # When false, constraint failures are recorded on the design instead of raised.
    enforce_constraints: bool = True
    engine_count_override: int | None = pydantic.Field(default=None, ge=1)
    isp_offset: Duration = 0.0

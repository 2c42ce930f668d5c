import pydantic

from rlvopt.config import Angle, AngularRate, ConfigBase, Duration, Length


class GravityTurnConfig(ConfigBase):
    start_altitude: Length = pydantic.Field(default=250.0, ge=0.0)
    final_pitch: Angle = pydantic.Field(default=25.0, ge=0.0, le=90.0)
    turn_rate: AngularRate = pydantic.Field(default=0.45, gt=0.0)
    timestep: Duration = pydantic.Field(default=1.0, gt=0.0)
    max_burn_time: Duration = pydantic.Field(default=1000.0, gt=0.0)
    drag_enabled: bool = False
    drag_coefficient: float = pydantic.Field(default=0.3, ge=0.0)


class AccelerationLimits(ConfigBase):
    """Minimum thrust-to-weight, in g."""

    stage1: float = pydantic.Field(default=1.3, gt=0.0)
    stage2: float = pydantic.Field(default=0.95, gt=0.0)

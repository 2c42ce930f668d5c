from rlvopt.trajectory.atmosphere import (
    VACUUM,
    AtmosphereModel,
    ConstantAtmosphere,
    StandardAtmosphere,
)
from rlvopt.trajectory.config import AccelerationLimits, GravityTurnConfig
from rlvopt.trajectory.gravity_turn import (
    TrajectoryPoint,
    TrajectoryResult,
    min_acceleration_check,
    simulate_ascent,
    static_acceleration,
)

__all__ = [
    "VACUUM",
    "AccelerationLimits",
    "AtmosphereModel",
    "ConstantAtmosphere",
    "GravityTurnConfig",
    "StandardAtmosphere",
    "TrajectoryPoint",
    "TrajectoryResult",
    "min_acceleration_check",
    "simulate_ascent",
    "static_acceleration",
]

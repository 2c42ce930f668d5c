import pydantic

from rlvopt.config import ConfigBase, Velocity


class LandingConfig(ConfigBase):
    """Linear landing law: the reentry burn absorbs any separation velocity
    beyond the anchor, the terminal landing burn stays at the floor."""

    anchor_ascent_dv: Velocity = 3500.0
    anchor_landing_dv: Velocity = 2000.0
    slope: float = pydantic.Field(default=1.0, ge=0.0)
    floor_dv: Velocity = pydantic.Field(default=500.0, ge=0.0)
    min_ascent_dv: Velocity = 1500.0
    max_ascent_dv: Velocity = 6000.0
    # Terminal burn that follows reentry; sets the mass entering the dense atmosphere.
    landing_burn_dv: Velocity = 500.0

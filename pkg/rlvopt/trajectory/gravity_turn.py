"""Point-mass ascent of the first stage along a fixed gravity-turn law.

Flat Earth with constant g0. The only contractual output is the
propellant-weighted mean Isp; the history is kept for reports and checks.
"""

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import pandas as pd

from rlvopt.constants import G0
from rlvopt.errors import LiftoffFailure, NonConvergence
from rlvopt.propellants import EnginePerformance
from rlvopt.trajectory.atmosphere import AtmosphereModel, StandardAtmosphere
from rlvopt.trajectory.config import AccelerationLimits, GravityTurnConfig


class TrajectoryPoint(NamedTuple):
    t_s: float
    altitude_m: float
    velocity_mps: float
    pitch_deg: float
    acceleration_g: float
    p_amb_pa: float
    isp_s: float
    mass_kg: float


@dataclass(frozen=True)
class TrajectoryResult:
    mean_isp_ascent: float
    burn_time: float
    history: tuple[TrajectoryPoint, ...]
    min_acceleration: float
    max_dynamic_pressure: float
    final_velocity: float
    final_altitude: float

    @property
    def liftoff_acceleration(self) -> float:
        return self.history[0].acceleration_g

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(self.history, columns=TrajectoryPoint._fields)


def simulate_ascent(
    engine: EnginePerformance,
    n_engines: int,
    m0_total: float,
    ascent_propellant: float,
    config: GravityTurnConfig | None = None,
    atmosphere: AtmosphereModel | None = None,
    reference_area: float = 0.0,
) -> TrajectoryResult:
    """Fly the stage until ``ascent_propellant`` is spent.

    Forward Euler with a shortened last step so exactly the ascent load is
    burned. Drag only acts when enabled in ``config``.
    """
    config = config or GravityTurnConfig()
    atmosphere = atmosphere or StandardAtmosphere()
    massflow = engine.total_massflow * n_engines
    if ascent_propellant <= 0:
        raise ValueError(f"ascent propellant must be positive, got {ascent_propellant}")
    if ascent_propellant / massflow > config.max_burn_time:
        raise NonConvergence(
            f"ascent burn of {ascent_propellant / massflow:.0f} s exceeds {config.max_burn_time:.0f} s",
            violation=ascent_propellant / massflow / config.max_burn_time - 1.0,
        )

    t = altitude = downrange = v_up = v_down = 0.0
    mass, remaining, pitch = m0_total, ascent_propellant, 90.0
    isp_flow = flow = 0.0
    max_q = 0.0
    history = []
    drag_factor = config.drag_coefficient * reference_area if config.drag_enabled else 0.0

    while remaining > 1e-12 * ascent_propellant:
        dt = min(config.timestep, remaining / massflow)
        p_amb = atmosphere.pressure(altitude)
        isp = engine.isp(p_amb)
        thrust = isp * G0 * massflow
        acceleration_g = thrust / (mass * G0)
        speed = math.hypot(v_up, v_down)
        history.append(
            TrajectoryPoint(t, altitude, speed, pitch, acceleration_g, p_amb, isp, mass)
        )
        if t == 0.0 and acceleration_g <= 1.0:
            raise LiftoffFailure(
                f"liftoff thrust-to-weight {acceleration_g:.3f}",
                violation=1.0 - acceleration_g,
            )

        q = 0.5 * atmosphere.density(altitude) * speed * speed
        max_q = max(max_q, q)
        drag = q * drag_factor

        if altitude >= config.start_altitude:
            pitch = max(pitch - config.turn_rate * dt, config.final_pitch)
        theta = math.radians(pitch)
        a_down = thrust / mass * math.cos(theta)
        a_up = thrust / mass * math.sin(theta) - G0
        if drag and speed > 0:
            a_down -= drag / mass * v_down / speed
            a_up -= drag / mass * v_up / speed

        downrange += v_down * dt
        altitude += v_up * dt
        v_down += a_down * dt
        v_up += a_up * dt
        mass -= massflow * dt
        remaining -= massflow * dt
        isp_flow += isp * massflow * dt
        flow += massflow * dt
        t += dt

    speed = math.hypot(v_up, v_down)
    p_amb = atmosphere.pressure(altitude)
    isp = engine.isp(p_amb)
    history.append(
        TrajectoryPoint(
            t, altitude, speed, pitch, isp * G0 * massflow / (mass * G0), p_amb, isp, mass
        )
    )
    mean_isp = isp_flow / flow
    logging.debug(
        f"Ascent: t_b={t:.1f} s, h={altitude / 1e3:.1f} km, v={speed:.0f} m/s, mean Isp={mean_isp:.2f} s"
    )
    return TrajectoryResult(
        mean_isp_ascent=mean_isp,
        burn_time=t,
        history=tuple(history),
        min_acceleration=min(point.acceleration_g for point in history),
        max_dynamic_pressure=max_q,
        final_velocity=speed,
        final_altitude=altitude,
    )


def static_acceleration(thrust: float, mass: float) -> float:
    """Thrust-to-weight in g."""
    return thrust / (G0 * mass)


def min_acceleration_check(
    acceleration: "TrajectoryResult | float",
    stage: int,
    limits: AccelerationLimits | None = None,
) -> bool:
    """Stage 1 is judged on the simulated ascent, stage 2 on its static
    thrust-to-weight at ignition."""
    limits = limits or AccelerationLimits()
    if isinstance(acceleration, TrajectoryResult):
        acceleration = acceleration.min_acceleration
    if stage == 1:
        return acceleration >= limits.stage1
    if stage == 2:
        return acceleration >= limits.stage2
    raise ValueError(f"Unknown stage: {stage}")

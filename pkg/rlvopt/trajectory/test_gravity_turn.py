import math

import pytest

from rlvopt.constants import BAR, G0, SEA_LEVEL_PRESSURE
from rlvopt.errors import LiftoffFailure, NonConvergence
from rlvopt.propellants import EngineDesign, evaluate_engine, get_combo
from rlvopt.trajectory import (
    VACUUM,
    ConstantAtmosphere,
    GravityTurnConfig,
    min_acceleration_check,
    simulate_ascent,
)

GLOW = 587e3
ASCENT_PROPELLANT = 408e3


def _engine():
    design = EngineDesign(get_combo("RP1"), 97 * BAR, 2.36, 0.265, 16.0)
    return evaluate_engine(design)


def test_falcon_like_ascent():
    engine = _engine()
    result = simulate_ascent(engine, 9, GLOW, ASCENT_PROPELLANT)
    assert engine.isp_sl < result.mean_isp_ascent < engine.isp_vac
    assert result.burn_time == pytest.approx(
        ASCENT_PROPELLANT / (9 * engine.total_massflow), rel=1e-9
    )
    assert result.liftoff_acceleration == pytest.approx(
        9 * engine.thrust_sl / (G0 * GLOW), rel=1e-9
    )
    assert result.min_acceleration == result.liftoff_acceleration

    masses = [p.mass_kg for p in result.history]
    assert all(a > b for a, b in zip(masses, masses[1:]))
    assert masses[-1] == pytest.approx(GLOW - ASCENT_PROPELLANT, rel=1e-9)

    ideal = G0 * engine.isp_vac * math.log(GLOW / (GLOW - ASCENT_PROPELLANT))
    assert result.final_velocity <= ideal

    frame = result.to_dataframe()
    assert list(frame.columns)[:3] == ["t_s", "altitude_m", "velocity_mps"]
    assert len(frame) == len(result.history)


def test_constant_atmospheres():
    engine = _engine()
    vacuum = simulate_ascent(engine, 9, GLOW, ASCENT_PROPELLANT, atmosphere=VACUUM)
    assert vacuum.mean_isp_ascent == pytest.approx(engine.isp_vac, rel=1e-12)
    sea_level = simulate_ascent(
        engine, 9, GLOW, ASCENT_PROPELLANT, atmosphere=ConstantAtmosphere(SEA_LEVEL_PRESSURE)
    )
    assert sea_level.mean_isp_ascent == pytest.approx(engine.isp_sl, rel=1e-12)


def test_halving_the_timestep():
    engine = _engine()
    coarse = simulate_ascent(engine, 9, GLOW, ASCENT_PROPELLANT)
    fine = simulate_ascent(
        engine, 9, GLOW, ASCENT_PROPELLANT, config=GravityTurnConfig(timestep=0.5)
    )
    assert abs(coarse.mean_isp_ascent - fine.mean_isp_ascent) < 0.5


def test_drag_toggle_changes_only_the_flight_path():
    engine = _engine()
    clean = simulate_ascent(engine, 9, GLOW, ASCENT_PROPELLANT, reference_area=10.5)
    draggy = simulate_ascent(
        engine,
        9,
        GLOW,
        ASCENT_PROPELLANT,
        config=GravityTurnConfig(drag_enabled=True),
        reference_area=10.5,
    )
    assert draggy.final_velocity < clean.final_velocity
    assert clean.max_dynamic_pressure > 0


def test_failures():
    engine = _engine()
    with pytest.raises(LiftoffFailure):
        simulate_ascent(engine, 5, GLOW, ASCENT_PROPELLANT)
    with pytest.raises(NonConvergence):
        simulate_ascent(engine, 1, 5e5, 4e5)


def test_acceleration_limits():
    assert not min_acceleration_check(1.29, 1)
    assert min_acceleration_check(1.30, 1)
    assert min_acceleration_check(0.95, 2)
    assert not min_acceleration_check(0.94, 2)
    result = simulate_ascent(_engine(), 9, GLOW, ASCENT_PROPELLANT)
    assert min_acceleration_check(result, 1)

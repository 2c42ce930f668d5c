import logging

import numpy as np
import pytest

from rlvopt.constants import BAR, G0, SEA_LEVEL_PRESSURE
from rlvopt.errors import (
    CorrelationRangeExceeded,
    CyclePowerInfeasible,
    PerformanceOutOfRange,
)
from rlvopt.propellants import (
    EngineDesign,
    GasGeneratorAssumptions,
    IspCorrectionConfig,
    PropulsionCalibration,
    engine_mass,
    equilibrium_lookup,
    evaluate_engine,
    gas_generator_losses,
    get_combo,
    ideal_nozzle_performance,
    isp_correction,
)


def _merlin_like(throat_diameter=0.265) -> EngineDesign:
    return EngineDesign(
        combo=get_combo("RP1"),
        chamber_pressure=97 * BAR,
        mixture_ratio=2.36,
        throat_diameter=throat_diameter,
        expansion_ratio=16.0,
    )


def test_first_stage_kerosene_engine_isp():
    perf = evaluate_engine(_merlin_like())
    assert perf.isp_vac == pytest.approx(310, abs=2)
    assert perf.isp_sl == pytest.approx(282, abs=2)
    assert 0 < perf.gg_massflow_fraction <= 0.2
    assert not perf.flow_separation


def test_hydrogen_upper_stage_isp():
    design = EngineDesign(
        combo=get_combo("LH2"),
        chamber_pressure=115 * BAR,
        mixture_ratio=6.5,
        throat_diameter=0.245,
        expansion_ratio=200.0,
    )
    perf = evaluate_engine(design, first_stage=False)
    assert perf.isp_vac == pytest.approx(450, abs=3)


def test_throat_scaling():
    small = evaluate_engine(_merlin_like(0.2))
    large = evaluate_engine(_merlin_like(0.4))
    assert large.thrust_vac == pytest.approx(4 * small.thrust_vac, rel=1e-12)
    assert large.isp_vac == pytest.approx(small.isp_vac, rel=1e-12)


def test_isp_decreases_with_ambient_pressure_and_closes_with_thrust():
    perf = evaluate_engine(_merlin_like())
    pressures = np.linspace(0.0, SEA_LEVEL_PRESSURE, 11)
    isps = [perf.isp(p) for p in pressures]
    assert isps[0] == perf.isp_vac
    assert all(a > b for a, b in zip(isps, isps[1:]))
    for p, isp in zip(pressures, isps):
        expected = isp * G0 * perf.total_massflow
        assert abs(perf.thrust(p) - expected) <= 1e-6 * expected


def test_unit_efficiency_is_identity():
    config = IspCorrectionConfig(
        base_efficiency={"RP1": 1.0, "LH2": 1.0, "LCH4": 1.0}, pressure_slope=0.0
    )
    assert isp_correction(338.9, 97 * BAR, get_combo("RP1"), config) == 338.9


def test_gas_generator_losses():
    design = _merlin_like()
    state = equilibrium_lookup(design.combo, design.chamber_pressure, design.mixture_ratio)
    ideal = ideal_nozzle_performance(state, design)

    no_work = gas_generator_losses(
        ideal, state, design, GasGeneratorAssumptions(pump_pressure_factor=0.0)
    )
    assert no_work.gg_massflow_fraction == 0.0
    assert no_work.isp_vac == ideal.isp_vac

    lossy = gas_generator_losses(ideal, state, design, GasGeneratorAssumptions())
    assert lossy.isp_vac < ideal.isp_vac
    assert lossy.total_massflow > ideal.total_massflow

    fractions = []
    for p_c in (60, 100, 150, 200):
        d = EngineDesign(design.combo, p_c * BAR, 2.36, 0.265, 16.0)
        s = equilibrium_lookup(d.combo, d.chamber_pressure, d.mixture_ratio)
        out = gas_generator_losses(
            ideal_nozzle_performance(s, d), s, d, GasGeneratorAssumptions()
        )
        fractions.append(out.gg_massflow_fraction)
    assert all(a < b for a, b in zip(fractions, fractions[1:]))

    with pytest.raises(CyclePowerInfeasible):
        gas_generator_losses(
            ideal, state, design, GasGeneratorAssumptions(max_massflow_fraction=0.01)
        )


def test_engine_mass_correlation():
    rp1 = get_combo("RP1")
    merlin = engine_mass(8536e3 / 9, rp1, 16.0)
    assert merlin == pytest.approx(470, rel=0.15)
    assert engine_mass(2 * 900e3, rp1, 16.0) < 2 * engine_mass(900e3, rp1, 16.0)
    assert engine_mass(900e3, rp1, 200.0) > engine_mass(900e3, rp1, 16.0)
    with pytest.raises(CorrelationRangeExceeded):
        engine_mass(50e3, rp1, 16.0)
    with pytest.raises(CorrelationRangeExceeded):
        engine_mass(3.5e6, rp1, 16.0)


def test_flow_separation_is_flagged_not_raised():
    design = EngineDesign(get_combo("RP1"), 50 * BAR, 2.4, 0.3, 90.0)
    state = equilibrium_lookup(design.combo, design.chamber_pressure, design.mixture_ratio)
    perf = ideal_nozzle_performance(state, design, p_ambient=SEA_LEVEL_PRESSURE)
    assert perf.flow_separation
    assert not ideal_nozzle_performance(state, design, p_ambient=0.0).flow_separation


def test_flow_separation_is_logged_as_warning(caplog):
    design = EngineDesign(get_combo("RP1"), 97 * BAR, 2.36, 0.265, 60.0)
    with caplog.at_level(logging.WARNING):
        perf = evaluate_engine(design)
    assert perf.flow_separation
    assert any(
        record.levelno == logging.WARNING and "separation" in record.getMessage() for record in caplog.records
    )


def test_isp_band_is_enforced():
    with pytest.raises(PerformanceOutOfRange):
        evaluate_engine(_merlin_like(), PropulsionCalibration(), isp_offset=200.0)

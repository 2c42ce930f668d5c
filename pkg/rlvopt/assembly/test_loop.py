import dataclasses
import math

import pytest

from rlvopt.assembly import (
    FALCON9,
    AssemblyOptions,
    Calibration,
    assemble_vehicle,
    converge_first_stage,
    converge_upper_stage,
)
from rlvopt.constants import G0
from rlvopt.errors import InfeasibleDesign
from rlvopt.masses import payload_bay_mass
from rlvopt.missions import GTO
from rlvopt.propellants import evaluate_engine
from rlvopt.staging import DeltaVAllocation
from rlvopt.trajectory import VACUUM

REPORTED = AssemblyOptions(enforce_constraints=False, engine_count_override=9)


@pytest.fixture(scope="module")
def falcon():
    return assemble_vehicle(FALCON9.design, GTO, options=REPORTED)


def _upper_inputs():
    params = FALCON9.design.upper
    bay = payload_bay_mass(GTO.payload_mass_kg, 2 * params.radius)
    performance = evaluate_engine(params.engine_design(), first_stage=False)
    return bay, params, performance


def test_upper_stage_converges_from_either_side():
    bay, params, performance = _upper_inputs()
    low = converge_upper_stage(bay, params, performance, 8500.0, eps2_init=0.03)
    # 0.10 lies beyond the mass-ratio pole and restarts at half of it.
    high = converge_upper_stage(bay, params, performance, 8500.0, eps2_init=0.10)
    assert low.structural_coefficient == pytest.approx(high.structural_coefficient, abs=1e-3)
    assert low.iterations < 50


def test_upper_stage_closes_rocket_equation():
    bay, params, performance = _upper_inputs()
    stage = converge_upper_stage(bay, params, performance, 8500.0)
    m_final = bay.upper_stage_payload + stage.structural_mass
    dv = G0 * performance.isp_vac * math.log((m_final + stage.propellant_mass) / m_final)
    assert dv == pytest.approx(8500.0, rel=1e-3)


def test_vacuum_first_stage_needs_one_isp_correction(falcon):
    first = FALCON9.design.first
    performance = evaluate_engine(first.engine_design())
    allocation = DeltaVAllocation.split(GTO.dv_total_mps, FALCON9.design.dv_stage1_ascent)
    stage = converge_first_stage(
        falcon.m0_upper, first, performance, 9, allocation, 5.0, atmosphere=VACUUM
    )
    assert stage.isp_iterations <= 2
    assert stage.trajectory.mean_isp_ascent == pytest.approx(performance.isp_vac, rel=1e-9)


def test_mass_closure(falcon):
    assert sum(falcon.mass_closure_terms()) == pytest.approx(falcon.glow, rel=1e-12)
    first = falcon.first_stage
    assert first.propellant.m_p_ascent + first.propellant.m_p_landing == pytest.approx(
        first.propellant_mass, rel=1e-12
    )
    # The first stage lifts off with the ascent load still to burn.
    burned = first.trajectory.history[0].mass_kg - first.trajectory.history[-1].mass_kg
    assert burned == pytest.approx(first.propellant.m_p_ascent, rel=1e-9)


def test_reported_structural_coefficients(falcon):
    for stage in (falcon.first_stage, falcon.upper_stage):
        assert stage.structural_coefficient == pytest.approx(
            stage.budget.structural_mass / (stage.budget.structural_mass + stage.propellant_mass)
        )
        assert 0 < stage.structural_coefficient < 1


def test_repeat_assembly_is_identical(falcon):
    again = assemble_vehicle(FALCON9.design, GTO, options=REPORTED)
    assert again.glow == falcon.glow
    assert again.first_stage.structural_mass == falcon.first_stage.structural_mass
    assert again.upper_stage.propellant_mass == falcon.upper_stage.propellant_mass


def test_slender_vehicle_is_reported_or_rejected(falcon):
    assert falcon.length_to_diameter > 20
    assert "length_to_diameter" in falcon.violations
    assert not falcon.feasible

    with pytest.raises(InfeasibleDesign) as info:
        assemble_vehicle(FALCON9.design, GTO, options=AssemblyOptions(engine_count_override=9))
    assert info.value.constraint == "length_to_diameter"
    assert info.value.violation > 0


def test_relaxed_slenderness_limit_passes():
    calibration = Calibration.model_validate({"constraints": {"max_length_to_diameter": 25}})
    vehicle = assemble_vehicle(
        FALCON9.design, GTO, calibration, AssemblyOptions(engine_count_override=9)
    )
    assert vehicle.feasible
    assert vehicle.liftoff_acceleration >= 1.3
    assert vehicle.upper_stage_acceleration >= 0.95


def test_weak_upper_engine_is_rejected():
    upper = dataclasses.replace(FALCON9.design.upper, throat_diameter=0.2)
    design = dataclasses.replace(FALCON9.design, upper=upper)
    with pytest.raises(InfeasibleDesign) as info:
        assemble_vehicle(design, GTO, options=AssemblyOptions(engine_count_override=9))
    assert info.value.constraint == "acceleration_stage2"


def test_too_few_engines_to_lift_off():
    with pytest.raises(InfeasibleDesign) as info:
        assemble_vehicle(FALCON9.design, GTO, options=AssemblyOptions(engine_count_override=5))
    assert info.value.constraint == "acceleration_stage1"


def test_engine_count_escalates_to_first_passing():
    calibration = Calibration.model_validate({"constraints": {"max_length_to_diameter": 25}})
    vehicle = assemble_vehicle(FALCON9.design, GTO, calibration)
    n = vehicle.first_stage.n_engines
    assert 5 <= n <= 15
    assert vehicle.liftoff_acceleration >= 1.3
    if n > 5:
        fewer = assemble_vehicle(
            FALCON9.design,
            GTO,
            calibration,
            AssemblyOptions(enforce_constraints=False, engine_count_override=n - 1),
        )
        assert "acceleration_stage1" in fewer.violations


def test_flow_separation_is_flagged():
    first = dataclasses.replace(FALCON9.design.first, expansion_ratio=50.0)
    design = dataclasses.replace(FALCON9.design, first=first)
    vehicle = assemble_vehicle(design, GTO, options=REPORTED)
    assert "flow_separation" in vehicle.flags

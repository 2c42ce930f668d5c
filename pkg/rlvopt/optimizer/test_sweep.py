import dataclasses

import numpy as np
import pytest

from rlvopt.assembly import Calibration
from rlvopt.assembly.reference import RP1_GLOW
from rlvopt.missions import GTO
from rlvopt.optimizer import GAConfig, GenomeSpace, fitness, run_sensitivity, sweep_frame
from rlvopt.optimizer import ga, sweep
from rlvopt.propellants import parse_combo_pair
from rlvopt.staging import ObjectiveKind, ObjectiveSpec

RP1 = parse_combo_pair("RP1")
GLOW = ObjectiveSpec()
SEED_GENOME = GenomeSpace.encode(RP1_GLOW.design)
FIXED = GAConfig(population=1, generations=0)


@pytest.fixture
def seeded_ga(monkeypatch):
    """Start every sweep run from the RP-1 reference genome with frozen genes applied."""

    def run(mission, objective, space, config=None, calibration=None, options=None, initial=None):
        genome = dataclasses.replace(SEED_GENOME, **space.frozen)
        return ga.run_ga(
            mission, objective, space, config, calibration, options, initial=[genome] * config.population
        )

    monkeypatch.setattr(sweep, "run_ga", run)


def test_allocation_points_freeze_first_stage_delta_v(seeded_ga):
    points = run_sensitivity("dv_allocation", [3000.0, 3500.0], GTO, RP1, GLOW, FIXED)
    assert [p.result.genome.dv1 for p in points] == [3000.0, 3500.0]
    assert all(p.result.vehicle.allocation.dv_stage1_ascent == p.value for p in points)


def test_failed_point_is_recorded_and_sweep_continues(seeded_ga):
    points = run_sensitivity("dv_allocation", [3000.0, 6000.0, 3500.0], GTO, RP1, GLOW, FIXED)
    frame = sweep_frame(points)
    assert frame["feasible"].tolist() == [True, False, True]
    assert frame.loc[1, "error"].startswith("bounds:")
    assert np.isnan(frame.loc[1, "objective_kg"])
    assert frame.loc[0, "glow_kg"] == pytest.approx(frame.loc[0, "objective_kg"])


def test_zero_isp_offset_matches_baseline(seeded_ga):
    (point,) = run_sensitivity("isp_offset", [0.0], GTO, RP1, GLOW, FIXED)
    space = GenomeSpace(*RP1)
    assert point.result.fitness == fitness(SEED_GENOME, space, GTO, GLOW)


def test_negative_isp_offset_raises_glow(seeded_ga):
    points = run_sensitivity("isp_offset", [-10.0, -5.0, 0.0], GTO, RP1, GLOW, FIXED)
    glows = [p.result.fitness for p in points]
    assert glows[0] > glows[1] > glows[2]


def test_budget_offset_shifts_total_delta_v(seeded_ga):
    points = run_sensitivity("dv_budget_offset", [-200.0, 0.0, 200.0], GTO, RP1, GLOW, FIXED)
    totals = [p.result.vehicle.allocation.dv_total for p in points]
    assert totals[0] == pytest.approx(GTO.dv_total_mps - 200.0)
    assert totals[2] == pytest.approx(GTO.dv_total_mps + 200.0)
    glows = [p.result.fitness for p in points]
    assert glows[0] < glows[1] < glows[2]


def test_reuse_axis_switches_to_expendable_mass(seeded_ga):
    points = run_sensitivity("n_reuses", [5, 50], GTO, RP1, GLOW, FIXED)
    assert all(p.result.objective.kind is ObjectiveKind.EM for p in points)
    assert points[1].result.fitness < points[0].result.fitness


def test_unknown_axis_is_rejected():
    with pytest.raises(ValueError, match="Unknown sweep axis"):
        run_sensitivity("payload", [1.0], GTO, RP1, GLOW, FIXED)


# Expendable mass relative to five reuses, single-fuel vehicles.
REUSE_EM_BANDS = {10: (0.68, 0.80), 20: (0.52, 0.66), 50: (0.43, 0.58)}


@pytest.mark.slow
@pytest.mark.parametrize(
    "pair, banded",
    [
        ("LH2/LH2", True),
        ("LCH4/LCH4", True),
        ("RP1/RP1", True),
        ("LCH4/LH2", False),
        ("RP1/LH2", False),
    ],
)
def test_expendable_mass_falls_with_reuse(pair, banded):
    config = GAConfig.profile("desk", GAConfig(seed=3))
    points = run_sensitivity(
        "n_reuses", [5, 10, 20, 50], GTO, parse_combo_pair(pair), GLOW, config, Calibration()
    )
    assert all(p.feasible for p in points), [p.error for p in points]
    em = {int(p.value): p.result.fitness for p in points}
    assert em[5] > em[10] > em[20] > em[50]
    if banded:
        for n_reuses, (low, high) in REUSE_EM_BANDS.items():
            assert low <= em[n_reuses] / em[5] <= high, n_reuses
    else:
        # The expendable LH2 upper stage holds a larger share.
        assert em[50] / em[5] <= 0.80
    # First-stage delta-v grows with reuses.
    dv1 = [p.result.vehicle.allocation.dv_stage1_ascent for p in points]
    assert np.all(np.diff(dv1) >= 0), dv1

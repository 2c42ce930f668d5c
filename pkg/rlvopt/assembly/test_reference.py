import pytest

from rlvopt.assembly import (
    FALCON9,
    MEASURES,
    REFERENCE_DESIGNS,
    assemble_reference,
    compare_reference,
    get_reference,
)
from rlvopt.staging import objective_value


@pytest.fixture(scope="module")
def falcon():
    return assemble_reference(FALCON9)


def test_every_reference_field_is_measurable():
    for reference in REFERENCE_DESIGNS.values():
        for value in reference.values:
            assert value.field in MEASURES, f"{reference.name}: no measure for {value.field}"


def test_falcon9_matches_optimizer_column(falcon):
    rows = compare_reference(FALCON9, falcon)
    failed = [(row.field, row.value, row.expected) for row in rows if row.passed is False]
    assert not failed, f"fields outside tolerance: {failed}"
    assert sum(row.passed is True for row in rows) == 9


def test_falcon9_shape(falcon):
    assert falcon.first_stage.n_engines == 9
    assert falcon.upper_stage.n_engines == 1
    assert falcon.liftoff_acceleration >= 1.3
    assert falcon.upper_stage_acceleration >= 0.95
    assert falcon.upper_stage.performance.isp_vac == pytest.approx(351.0, abs=5.0)
    # Ascent-only burn is shorter than the rated burn of the full load.
    assert falcon.first_stage.trajectory.burn_time < falcon.first_stage.rated_burn_time


def test_falcon9_ballistic_diagnostic(falcon):
    root = falcon.ballistic_root
    assert 1.0 < root < 3.0


def test_lh2_em_design():
    reference = get_reference("lh2_em")
    vehicle = assemble_reference(reference)
    em = objective_value(vehicle, reference.objective) / 1000.0
    assert em == pytest.approx(7.5, rel=0.10)
    for row in compare_reference(reference, vehicle):
        assert row.passed is not False, f"{row.field}: {row.value:.2f} vs {row.expected}"


def test_lh2_glow_design():
    reference = get_reference("LH2_GLOW")
    vehicle = assemble_reference(reference)
    for row in compare_reference(reference, vehicle):
        assert row.passed is not False, f"{row.field}: {row.value:.2f} vs {row.expected}"


def test_rp1_design_escalates_to_six_engines():
    vehicle = assemble_reference(get_reference("rp1_glow"))
    assert vehicle.first_stage.n_engines == 6


def test_hydrogen_beats_kerosene_on_glow():
    lh2 = assemble_reference(get_reference("lh2_glow"))
    rp1 = assemble_reference(get_reference("rp1_glow"))
    assert lh2.glow < rp1.glow
    assert lh2.structural_mass_upper > rp1.structural_mass_upper


def test_unknown_reference():
    with pytest.raises(ValueError, match="Unknown reference design"):
        get_reference("saturn5")

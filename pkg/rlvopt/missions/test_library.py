import pydantic
import pytest

from rlvopt.config import parse_config
from rlvopt.errors import ConfigError
from rlvopt.missions import (
    GTO,
    LEO,
    MissionSpec,
    budget_total,
    builtin_missions,
    get_mission,
    loss_budget_breakdown,
)


def test_builtin_missions():
    assert GTO.dv_total_mps == 12000.0
    assert GTO.payload_mass_kg == 5000.0
    assert LEO.payload_mass_kg == 15600.0
    assert LEO.dv_total_mps == 9500.0
    for mission in builtin_missions():
        assert mission.rotation_credit_mps == 460.0
        assert mission.dv_total_mps > mission.dv_ideal_mps - mission.rotation_credit_mps
    assert get_mission("gto") is GTO
    with pytest.raises(ValueError):
        get_mission("mars")


def test_builtins_are_immutable():
    with pytest.raises(pydantic.ValidationError):
        GTO.payload_mass_kg = 1.0


def test_loss_budget():
    drag = [l for l in loss_budget_breakdown(GTO) if l.name == "drag"][0]
    assert (drag.low, drag.high) == (100.0, 150.0)
    for mission in builtin_missions():
        assert budget_total(mission) == pytest.approx(mission.dv_total_mps, rel=0.05)
    assert budget_total(GTO, losses=[]) == GTO.dv_ideal_mps - GTO.rotation_credit_mps


def test_custom_missions_are_validated():
    custom = parse_config(
        "name: SSO\npayload_mass_kg: 3000\ndv_ideal_mps: 8200\ndv_total_mps: 9800\n",
        MissionSpec,
    )
    assert custom.rotation_credit_mps == 460.0
    with pytest.raises(ConfigError, match="payload_mass_kg"):
        parse_config(
            "name: bad\npayload_mass_kg: -1\ndv_ideal_mps: 8200\ndv_total_mps: 9800\n",
            MissionSpec,
        )
    with pytest.raises(ConfigError):
        parse_config(
            "name: bad\npayload_mass_kg: 10\ndv_ideal_mps: 8200\ndv_total_mps: 7000\n",
            MissionSpec,
        )

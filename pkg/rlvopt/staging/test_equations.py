import math

import numpy as np
import pytest

from rlvopt.constants import G0
from rlvopt.errors import DomainError, InfeasibleStage, NegativeAscentPropellant
from rlvopt.masses import payload_bay_mass
from rlvopt.staging import (
    DeltaVAllocation,
    first_stage_structural_mass,
    landing_dv_model,
    landing_structural_coefficient,
    mass_ratio,
    propellant_split,
    tsiolkovsky_dv,
    upper_stage_propellant,
)


def test_rocket_equation():
    assert tsiolkovsky_dv(312.0, math.e, 1.0) == pytest.approx(9.80665 * 312, rel=1e-12)
    assert mass_ratio(0.0, 300.0) == 1.0
    for isp, m0, mf in [(300.0, 5.0, 2.0), (450.0, 1.2e6, 3.1e5), (250.0, 10.0, 9.99)]:
        assert mass_ratio(tsiolkovsky_dv(isp, m0, mf), isp) == pytest.approx(m0 / mf, rel=1e-12)
    with pytest.raises(DomainError):
        tsiolkovsky_dv(300.0, 1.0, 2.0)
    with pytest.raises(DomainError):
        mass_ratio(100.0, 0.0)


def test_upper_stage_propellant():
    bay = payload_bay_mass(5000.0, 3.66)
    assert upper_stage_propellant(bay, 0.0, 351.0, 0.041) == 0.0
    mp2 = upper_stage_propellant(bay, 8500.0, 351.0, 0.041)
    assert mp2 == pytest.approx(113.7e3, rel=0.10)

    r = mass_ratio(8500.0, 351.0)
    previous = 0.0
    for gap in (1e-2, 1e-4, 1e-6, 1e-8):
        mp = upper_stage_propellant(bay, 8500.0, 351.0, (1 - gap) / r)
        assert mp > previous
        previous = mp
    assert previous > 1e9
    with pytest.raises(InfeasibleStage):
        upper_stage_propellant(bay, 8500.0, 351.0, (1 + 1e-9) / r)


def test_landing_law():
    assert landing_dv_model(3500.0) == 2000.0
    assert landing_dv_model(2000.0) == 500.0
    assert landing_dv_model(4300.0) == 2800.0
    with pytest.raises(DomainError):
        landing_dv_model(7000.0)


def test_landing_coefficient():
    assert landing_structural_coefficient(0.0, 300.0) == 1.0
    assert landing_structural_coefficient(2000.0, 300.0) == pytest.approx(
        math.exp(-2000.0 / 2941.995), abs=1e-4
    )
    values = [landing_structural_coefficient(dv, 300.0) for dv in (500, 1000, 2000, 3000)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert all(0 < v <= 1 for v in values)


def test_first_stage_closure_on_random_draws():
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 1000:
        m0_2 = rng.uniform(2e4, 3e5)
        dv1 = rng.uniform(1500.0, 6000.0)
        isp = rng.uniform(250.0, 450.0)
        eps_l = landing_structural_coefficient(landing_dv_model(dv1), isp)
        eps1 = rng.uniform(0.03, 0.2)
        if 1.0 / eps1 - mass_ratio(dv1, isp) / eps_l <= 0:
            continue
        m_s1 = first_stage_structural_mass(m0_2, dv1, isp, eps1, eps_l)
        split = propellant_split(m_s1, eps1, eps_l)

        m0 = m0_2 + m_s1 + split.m_p_total
        mf = m0_2 + m_s1 + split.m_p_landing
        assert tsiolkovsky_dv(isp, m0, mf) == pytest.approx(dv1, rel=1e-9)
        assert tsiolkovsky_dv(isp, m_s1 + split.m_p_landing, m_s1) == pytest.approx(
            landing_dv_model(dv1), rel=1e-9
        )
        assert m_s1 / (m_s1 + split.m_p_total) == pytest.approx(eps1, rel=1e-12)
        assert m_s1 / (m_s1 + split.m_p_landing) == pytest.approx(eps_l, rel=1e-12)
        assert split.m_p_ascent + split.m_p_landing == pytest.approx(split.m_p_total)
        checked += 1


def test_first_stage_edge_cases():
    assert first_stage_structural_mass(1e5, 0.0, 300.0, 0.06, 1.0) == 0.0
    with pytest.raises(InfeasibleStage):
        first_stage_structural_mass(1e5, 5000.0, 280.0, 0.2, 0.3)


def test_propellant_split():
    split = propellant_split(27.4e3, 0.059, 1.0)
    assert split.m_p_landing == 0.0
    assert split.m_p_total == pytest.approx(27.4e3 * 0.941 / 0.059)

    em_column = propellant_split(38.3e3, 0.102, 0.9)
    assert em_column.m_p_total == pytest.approx(337.9e3, rel=0.01)

    with pytest.raises(NegativeAscentPropellant):
        propellant_split(1e4, 0.3, 0.2)


def test_allocation():
    allocation = DeltaVAllocation.split(12000.0, 3500.0)
    assert allocation.dv_stage2 == 8500.0
    assert allocation.dv_total == 12000.0
    assert allocation.dv_landing == 2000.0
    with pytest.raises(DomainError):
        DeltaVAllocation(-1.0, 8500.0, 500.0)

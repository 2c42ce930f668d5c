import numpy as np
import pytest

from rlvopt.trajectory import VACUUM, ConstantAtmosphere, StandardAtmosphere


def test_standard_atmosphere():
    atmosphere = StandardAtmosphere()
    assert atmosphere.pressure(0.0) == pytest.approx(101325.0, rel=1e-3)
    assert atmosphere.density(0.0) == pytest.approx(1.225, rel=1e-2)
    assert atmosphere.pressure(11000.0) == pytest.approx(22632.06, rel=1e-9)
    altitudes = np.linspace(0.0, 120e3, 241)
    pressures = [atmosphere.pressure(h) for h in altitudes]
    assert all(a > b for a, b in zip(pressures, pressures[1:]))
    assert pressures[-1] > 0


def test_stubs():
    assert VACUUM.pressure(0.0) == 0.0
    assert ConstantAtmosphere(101325.0).pressure(50e3) == 101325.0

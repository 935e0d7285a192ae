"""Device temperature and the computing-power bound."""

import pytest

from infotherm.core import K_BOLTZMANN_SI, LN2
from infotherm.landauer import (
    BoundQuery,
    device_temperature,
    energy_per_bit,
    max_bit_rate,
)

# 1e-12 / (1.380649e-23 * 1e9 * ln 2), frozen by independent arithmetic
T_PICOWATT_GBIT = 104.49397644795768
# 1e-9 / (10 * 1.380649e-23 * 300 * ln 2)
F_MAX_NW_300K = 34831325482.652565


def test_device_temperature_value():
    assert float(device_temperature(1e-12, 1e9)) == pytest.approx(T_PICOWATT_GBIT, rel=1e-12)


def test_device_temperature_linearities():
    base = float(device_temperature(1e-12, 1e9))
    assert float(device_temperature(2e-12, 1e9)) == pytest.approx(2 * base, rel=1e-12)
    assert float(device_temperature(1e-12, 2e9)) == pytest.approx(base / 2, rel=1e-12)


def test_max_bit_rate_value():
    assert max_bit_rate(1e-9, 300.0, 10.0) == pytest.approx(F_MAX_NW_300K, rel=1e-12)
    assert max_bit_rate(1e-9, 300.0, 10.0) == pytest.approx(3.483e10, rel=1e-3)


def test_consistency_identity():
    """Running at f_max puts the device exactly margin * T_n hot."""
    for power, t_n, margin in [(1e-9, 300.0, 10.0), (2.5e-6, 77.0, 3.0), (1.0, 4.2, 1.0)]:
        f = max_bit_rate(power, t_n, margin)
        assert float(device_temperature(power, f)) == pytest.approx(margin * t_n, rel=1e-12)


def test_margin_one_gives_landauer_floor():
    """At margin 1 the energy per bit is exactly k T_n ln 2."""
    f = max_bit_rate(1e-9, 300.0, margin=1.0)
    assert energy_per_bit(1e-9, f) == pytest.approx(K_BOLTZMANN_SI * 300.0 * LN2, rel=1e-12)


def test_rate_vanishes_with_power():
    assert max_bit_rate(1e-30, 300.0) < 1e-6


def test_input_validation():
    with pytest.raises(ValueError, match="power"):
        device_temperature(0.0, 1e9)
    with pytest.raises(ValueError, match="bit rate"):
        device_temperature(1e-9, 0.0)
    with pytest.raises(ValueError, match="noise temperature"):
        max_bit_rate(1e-9, -1.0)
    with pytest.raises(ValueError, match="margin"):
        max_bit_rate(1e-9, 300.0, margin=0.5)


def test_bound_query_validation():
    q = BoundQuery(power_w=1e-9, noise_temperature_k=300.0)
    assert q.margin == 10.0
    with pytest.raises(ValueError, match="margin"):
        BoundQuery(power_w=1e-9, noise_temperature_k=300.0, margin=0.0)
    with pytest.raises(ValueError, match="power"):
        BoundQuery(power_w=0.0, noise_temperature_k=300.0)
    with pytest.raises(ValueError, match="bit rate"):
        BoundQuery(power_w=1e-9, noise_temperature_k=300.0, bit_rate_hz=0.0)

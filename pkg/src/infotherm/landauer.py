"""Computing-power bounds from power and noise temperature.

A device emitting or absorbing bits at rate f under power P runs at
T = P / (k f ln 2). Keeping that temperature a safety margin above the
ambient noise temperature caps the bit rate at

    f_max = P / (margin * k * T_n * ln 2)

At margin 1 the energy per bit is exactly k T_n ln 2, the minimum
dissipation per elementary logical operation. The margin defaults to 10,
a rule of thumb rather than a derived constant, so it is a parameter.

Everything here is SI only; the bound is meaningless in reduced units.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import K_BOLTZMANN_SI, LN2, Temperature

DEFAULT_MARGIN = 10.0


@dataclass(frozen=True)
class BoundQuery:
    """Inputs for the computing-power bound."""

    power_w: float
    noise_temperature_k: float
    margin: float = DEFAULT_MARGIN
    bit_rate_hz: float | None = None

    def __post_init__(self):
        if not self.power_w > 0:
            raise ValueError("power must be positive")
        if not self.noise_temperature_k > 0:
            raise ValueError("noise temperature must be positive")
        if not self.margin >= 1:
            raise ValueError("margin must be at least 1")
        if self.bit_rate_hz is not None and not self.bit_rate_hz > 0:
            raise ValueError("bit rate must be positive")


def device_temperature(power_w: float, bit_rate_hz: float) -> Temperature:
    """Temperature of an emitter/receiver: T = P / (k f ln 2), kelvin."""
    if not power_w > 0:
        raise ValueError("power must be positive")
    if not bit_rate_hz > 0:
        raise ValueError("bit rate must be positive")
    return Temperature(power_w / (K_BOLTZMANN_SI * bit_rate_hz * LN2))


def max_bit_rate(power_w: float, noise_temperature_k: float, margin: float = DEFAULT_MARGIN) -> float:
    """Upper bound on bit rate: f_max = P / (margin k T_n ln 2), 1/s.

    By construction device_temperature(P, f_max) = margin * T_n.
    """
    if not power_w > 0:
        raise ValueError("power must be positive")
    if not noise_temperature_k > 0:
        raise ValueError("noise temperature must be positive")
    if not margin >= 1:
        raise ValueError("margin must be at least 1")
    return power_w / (margin * K_BOLTZMANN_SI * noise_temperature_k * LN2)


def energy_per_bit(power_w: float, bit_rate_hz: float) -> float:
    """Energy spent per bit, P/f, in joules."""
    if not power_w > 0:
        raise ValueError("power must be positive")
    if not bit_rate_hz > 0:
        raise ValueError("bit rate must be positive")
    return power_w / bit_rate_hz

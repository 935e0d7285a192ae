"""Physical constants, unit modes, and information/entropy conversions.

Two unit modes are supported:

* ``si``      -- k is the CODATA Boltzmann constant (exact since the 2019
                 SI redefinition) and energies are in joules.
* ``reduced`` -- k = 1 and the level energy sets the energy scale, which
                 makes most closed-form results exact and testable.

Entropy is carried in units of k everywhere (multiplying by 1.38e-23 in
intermediate arithmetic would invite underflow); information is carried in
nats, with bits appearing only at I/O boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

LN2 = math.log(2.0)

#: Boltzmann constant in J/K, exact by definition.
K_BOLTZMANN_SI = 1.380649e-23

_MODES = ("si", "reduced")


@dataclass(frozen=True)
class PhysConstants:
    """Unit-mode bundle handed to every temperature/entropy computation."""

    k_boltzmann: float
    mode: str

    def __post_init__(self):
        if self.mode not in _MODES:
            raise ValueError(f"unknown unit mode {self.mode!r}, expected one of {_MODES}")
        if not self.k_boltzmann > 0:
            raise ValueError("k_boltzmann must be positive")
        if self.mode == "si" and self.k_boltzmann != K_BOLTZMANN_SI:
            raise ValueError("si mode requires the exact CODATA Boltzmann constant")

    @classmethod
    def si(cls) -> "PhysConstants":
        return cls(k_boltzmann=K_BOLTZMANN_SI, mode="si")

    @classmethod
    def reduced(cls) -> "PhysConstants":
        return cls(k_boltzmann=1.0, mode="reduced")


#: Shared singletons; all operations default to reduced units except where
#: a module states otherwise.
SI = PhysConstants.si()
REDUCED = PhysConstants.reduced()


@dataclass(frozen=True)
class Information:
    """An amount of information in nats (dimensionless, non-negative)."""

    nats: float

    def __post_init__(self):
        if not self.nats >= 0:
            raise ValueError("information must be non-negative")

    def __float__(self) -> float:
        return float(self.nats)

    @property
    def bits(self) -> float:
        return self.nats / LN2


@dataclass(frozen=True)
class Entropy:
    """Entropy in units of k.

    Closed-form entropies (k ln Omega and friends) are non-negative;
    entropy *changes* carried by transfer records may be negative, so no
    sign constraint is imposed here.
    """

    k_units: float

    def __float__(self) -> float:
        return float(self.k_units)

    def to_physical(self, consts: PhysConstants) -> float:
        """Entropy in J/K under ``consts`` (value times k)."""
        return self.k_units * consts.k_boltzmann


@dataclass(frozen=True)
class Temperature:
    """Temperature: kelvin in si mode, epsilon/k units in reduced mode.

    Negative values are legal (population inversion); exactly zero is not
    a value any operation returns, so it is rejected here.
    """

    value: float

    def __post_init__(self):
        if self.value == 0:
            raise ValueError("zero temperature is an error, not a value")

    def __float__(self) -> float:
        return float(self.value)


@dataclass(frozen=True)
class Energy:
    """A heat or internal energy: joules in si mode, multiples of the level
    energy in reduced mode. Non-negative by construction."""

    value: float

    def __post_init__(self):
        if not self.value >= 0:
            raise ValueError("energy must be non-negative")

    def __float__(self) -> float:
        return float(self.value)


def bits_to_nats(b: float) -> Information:
    """Convert a bit count to nats (1 bit = ln 2 nat)."""
    if b < 0:
        raise ValueError("bit count must be non-negative")
    return Information(b * LN2)


def nats_to_bits(i: Information | float) -> float:
    """Convert nats back to a (real-valued) bit count."""
    nats = float(i)
    if nats < 0:
        raise ValueError("information must be non-negative")
    return nats / LN2


def entropy_from_information(i: Information | float) -> Entropy:
    """Entropy contributed by information: S = k*I, so the k-unit value
    equals the nat count."""
    nats = float(i)
    if nats < 0:
        raise ValueError("information must be non-negative")
    return Entropy(nats)

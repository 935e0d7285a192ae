"""Clausius auditing for information transfer.

Broadcasting one file to N receivers is heat flow from a hot bath (the
emitting antenna, bit energy eps) to a cold one (each receiver sees bit
energy eps/N, hence temperature T_hot/N). Since dQ/T = k*dI on each side,
the temperatures cancel and the audit reduces to pure information
bookkeeping: N*k*dI deposited, k*dI removed, (N-1)*k*dI gained.

A non-random file carries less information than the entropy its energy
accounts for; the shortfall appears here as a strictly positive
``clausius_margin``, which is the informatic Clausius inequality
dS >= k*dI in ledger form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LN2, REDUCED, Energy, Entropy, Information, PhysConstants, Temperature
from .bitstream import FileStats, RANDOM, file_temperature
from .twolevel import CLAUSIUS_TOL_K, SATISFIED, VIOLATED


@dataclass(frozen=True)
class BroadcastResult:
    """One-to-N broadcast balance. All entropies in k units."""

    n_receivers: int
    t_hot: Temperature
    t_cold: Temperature
    info_sent: Information
    entropy_removed: Entropy
    entropy_deposited: Entropy
    net_gain: Entropy
    clausius_margin: Entropy


@dataclass(frozen=True)
class ClausiusCheck:
    """Verdict on dS >= k*dI, with the signed margin in k units."""

    verdict: str
    margin_k: float


@dataclass(frozen=True)
class CombinedLedger:
    """Combined thermal + informatic entropy audit."""

    thermal_heat: Energy
    bath_temperature: Temperature
    info_delta: Information
    entropy_lower_bound: Entropy
    entropy_actual: Entropy
    verdict: str


def broadcast_balance(
    stats: FileStats,
    epsilon_hot: float,
    n_receivers: int,
    consts: PhysConstants = REDUCED,
) -> BroadcastResult:
    """Audit broadcasting the analyzed file to ``n_receivers`` antennas.

    A random (equilibrium) file carries the full dI = L ln 2; otherwise
    dI is the order-k conditional-rate estimate times L, which is what
    makes the margin positive for correlated streams. Each receiver side
    still absorbs heat worth k * L ln 2 of entropy, so the margin is
    k * (L ln 2 - dI), realizing dS >= k*dI.
    """
    if n_receivers < 1:
        raise ValueError("receiver count must be at least 1")
    if not epsilon_hot > 0:
        raise ValueError("bit energy must be positive")
    if stats.equilibrium == RANDOM:
        info = stats.length * LN2
    else:
        if stats.info_rate_markov is None:
            raise ValueError(
                "stream too short for the order-%d information estimate; "
                "re-analyze with a smaller markov order" % stats.markov_order
            )
        info = stats.length * stats.info_rate_markov
    t_hot = file_temperature(epsilon_hot, consts)
    return BroadcastResult(
        n_receivers=n_receivers,
        t_hot=t_hot,
        t_cold=Temperature(float(t_hot) / n_receivers),
        info_sent=Information(info),
        entropy_removed=Entropy(info),
        entropy_deposited=Entropy(n_receivers * info),
        net_gain=Entropy((n_receivers - 1) * info),
        clausius_margin=Entropy(stats.length * LN2 - info),
    )


def clausius_check(entropy_change: Entropy | float, info_change: Information | float) -> ClausiusCheck:
    """Check the informatic Clausius inequality dS >= k*dI.

    ``entropy_change`` is in k units, so the comparison is direct; the
    margin is dS/k - dI.
    """
    margin = float(entropy_change) - float(info_change)
    verdict = SATISFIED if margin >= -CLAUSIUS_TOL_K else VIOLATED
    return ClausiusCheck(verdict=verdict, margin_k=margin)


def combined_balance(
    heat: Energy | float,
    temperature: Temperature | float,
    info_delta: Information | float,
    entropy_actual: Entropy | float,
    consts: PhysConstants = REDUCED,
) -> CombinedLedger:
    """Audit a process that moves both heat and information.

    The entropy change must cover dQ/T plus k*dI; the bound and the
    actual change are compared in k units.
    """
    t = float(temperature)
    if not t > 0:
        raise ValueError("bath temperature must be positive")
    q = float(heat)
    if q < 0:
        raise ValueError("heat must be non-negative")
    info = float(info_delta)
    actual = float(entropy_actual)
    bound = q / (consts.k_boltzmann * t) + info
    verdict = SATISFIED if actual >= bound - CLAUSIUS_TOL_K else VIOLATED
    return CombinedLedger(
        thermal_heat=Energy(q),
        bath_temperature=Temperature(t),
        info_delta=Information(info),
        entropy_lower_bound=Entropy(bound),
        entropy_actual=Entropy(actual),
        verdict=verdict,
    )

"""The amplifier Carnot cycle of a file travelling down a lossy fiber.

Reading or writing a file at fixed bit energy is an isothermal step;
attenuation and amplification change bit energy at fixed information, so
they are adiabatic. One amplifier span is therefore a four-step Carnot
cycle: write hot, attenuate (cool), read cold, amplify back. The file's
temperature along the fiber follows its bit energy pointwise,
T(z) = eps(z) / (2 k ln 2), and attenuation is the usual exponential loss
eps(z) = eps0 * exp(-alpha z).

An ideal amplifier conserves entropy, Q_hot/T_hot = Q_cold/T_cold, which
pins the work it must inject: W = Q_hot - Q_cold = Q_hot * (1 - T_c/T_h),
i.e. the Carnot efficiency. Any amplifier doing less work shows up as a
negative entropy balance in ``amplifier_entropy_balance``: a cyclic
machine pumping heat from a low-bit-energy file to a high-bit-energy one
for free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import LN2, REDUCED, Energy, Information, PhysConstants, Temperature
from .bitstream import file_temperature
from .twolevel import CLAUSIUS_TOL_K, SATISFIED, VIOLATED

ISOTHERMAL_WRITE = "isothermal_write"
ADIABATIC_ATTENUATION = "adiabatic_attenuation"
ISOTHERMAL_READ = "isothermal_read"
ADIABATIC_AMPLIFICATION = "adiabatic_amplification"

STEP_TAGS = (ISOTHERMAL_WRITE, ADIABATIC_ATTENUATION, ISOTHERMAL_READ, ADIABATIC_AMPLIFICATION)


def carnot_efficiency(t_hot: Temperature | float, t_cold: Temperature | float) -> float:
    """Reversible work bound between two baths: eta = 1 - T_cold/T_hot."""
    th, tc = float(t_hot), float(t_cold)
    if not 0 < tc <= th:
        raise ValueError("require 0 < T_cold <= T_hot")
    return 1.0 - tc / th


def amplifier_work(
    q_cold: Energy | float, t_hot: Temperature | float, t_cold: Temperature | float
) -> tuple[Energy, Energy]:
    """Heat emitted and work injected by an entropy-conserving amplifier.

    Reads ``q_cold`` at T_cold and re-emits Q_hot = Q_cold * T_hot/T_cold;
    the work W = Q_hot - Q_cold satisfies W / Q_hot = 1 - T_cold/T_hot.
    """
    th, tc = float(t_hot), float(t_cold)
    qc = float(q_cold)
    if not 0 < tc < th:
        raise ValueError("require 0 < T_cold < T_hot")
    if not qc > 0:
        raise ValueError("heat read must be positive")
    qh = qc * th / tc
    return Energy(qh), Energy(qh - qc)


@dataclass(frozen=True)
class AmplifierAudit:
    """Second-law audit of one amplification with a given work input."""

    q_hot: Energy
    entropy_balance_k: float
    verdict: str


def amplifier_entropy_balance(
    q_cold: Energy | float,
    t_hot: Temperature | float,
    t_cold: Temperature | float,
    work: Energy | float,
    consts: PhysConstants = REDUCED,
) -> AmplifierAudit:
    """Entropy balance Q_hot/T_hot - Q_cold/T_cold (k units) for an
    amplifier injecting ``work``; negative balance means the second law is
    violated and the verdict says so."""
    th, tc = float(t_hot), float(t_cold)
    qc, w = float(q_cold), float(work)
    if not (th > 0 and tc > 0):
        raise ValueError("temperatures must be positive")
    if qc < 0 or w < 0:
        raise ValueError("heat and work must be non-negative")
    qh = qc + w
    balance = qh / (consts.k_boltzmann * th) - qc / (consts.k_boltzmann * tc)
    verdict = SATISFIED if balance >= -CLAUSIUS_TOL_K else VIOLATED
    return AmplifierAudit(q_hot=Energy(qh), entropy_balance_k=balance, verdict=verdict)


@dataclass(frozen=True)
class StepRecord:
    """One of the four cycle steps. Heat is the energy exchanged at the
    step's fixed temperature; attenuation loss is not ledgered (it leaves
    the informatics system)."""

    kind: str
    epsilon_start: float
    epsilon_end: float
    temperature_start: float
    temperature_end: float
    heat: float
    work: float
    info_nats: float


@dataclass(frozen=True)
class CycleRecord:
    """Four-step bookkeeping of one amplifier span."""

    span_index: int
    steps: tuple[StepRecord, ...]
    t_hot: Temperature
    t_cold: Temperature
    q_hot: Energy
    q_cold: Energy
    work_in: Energy
    info: Information


@dataclass(frozen=True)
class FiberChainConfig:
    """Chain geometry: launch bit energy, loss, spacing, span count, and
    the (random) file length in bits."""

    epsilon0: float
    alpha_per_km: float
    span_km: float
    n_spans: int
    file_length: int

    def __post_init__(self):
        if not self.epsilon0 > 0:
            raise ValueError("launch bit energy must be positive")
        if not self.alpha_per_km > 0:
            raise ValueError("attenuation coefficient must be positive")
        if not self.span_km > 0:
            raise ValueError("span length must be positive")
        if self.n_spans < 0:
            raise ValueError("span count must be non-negative")
        if self.file_length < 1:
            raise ValueError("file length must be positive")

    @property
    def attenuation(self) -> float:
        """Per-span energy survival g = exp(-alpha * span) in (0, 1)."""
        return math.exp(-self.alpha_per_km * self.span_km)


@dataclass(frozen=True)
class ChainResult:
    """All spans plus chain totals."""

    config: FiberChainConfig
    records: tuple[CycleRecord, ...]
    total_work: Energy
    total_heat_hot: Energy
    total_heat_cold: Energy
    info: Information
    span_efficiency: float


def simulate_chain(cfg: FiberChainConfig, consts: PhysConstants = REDUCED) -> ChainResult:
    """Run the file through ``n_spans`` identical amplifier Carnot cycles.

    The file is assumed random, so it carries info = L ln 2 nats and heat
    Q_hot = L eps0 / 2 per span. Amplification restores the launch energy
    exactly, so every span repeats the same reversible cycle with
    efficiency W/Q_hot = 1 - g.
    """
    g = cfg.attenuation
    eps0 = cfg.epsilon0
    eps_low = g * eps0
    info = cfg.file_length * LN2
    t_hot = file_temperature(eps0, consts)
    t_cold = Temperature(g * float(t_hot))
    q_hot = cfg.file_length * eps0 / 2.0
    q_cold = g * q_hot
    records = []
    for span in range(cfg.n_spans):
        _, work = amplifier_work(q_cold, t_hot, t_cold)
        steps = (
            StepRecord(ISOTHERMAL_WRITE, eps0, eps0, float(t_hot), float(t_hot),
                       heat=q_hot, work=0.0, info_nats=info),
            StepRecord(ADIABATIC_ATTENUATION, eps0, eps_low, float(t_hot), float(t_cold),
                       heat=0.0, work=0.0, info_nats=info),
            StepRecord(ISOTHERMAL_READ, eps_low, eps_low, float(t_cold), float(t_cold),
                       heat=q_cold, work=0.0, info_nats=info),
            StepRecord(ADIABATIC_AMPLIFICATION, eps_low, eps0, float(t_cold), float(t_hot),
                       heat=0.0, work=float(work), info_nats=info),
        )
        records.append(CycleRecord(
            span_index=span,
            steps=steps,
            t_hot=t_hot,
            t_cold=t_cold,
            q_hot=Energy(q_hot),
            q_cold=Energy(q_cold),
            work_in=work,
            info=Information(info),
        ))
    n = len(records)
    total_work = n * float(records[0].work_in) if n else 0.0
    return ChainResult(
        config=cfg,
        records=tuple(records),
        total_work=Energy(total_work),
        total_heat_hot=Energy(n * q_hot),
        total_heat_cold=Energy(n * q_cold),
        info=Information(info),
        span_efficiency=1.0 - g,
    )

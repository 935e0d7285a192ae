"""Thermodynamics of binary information.

Entropy, temperature, heat, and information for two-level gases and
binary files; Clausius auditing of transfers and broadcasts; the
amplifier Carnot cycle of fiber transmission; and the Landauer bound on
computing power.
"""

from .core import (
    LN2,
    K_BOLTZMANN_SI,
    REDUCED,
    SI,
    Energy,
    Entropy,
    Information,
    PhysConstants,
    Temperature,
    bits_to_nats,
    entropy_from_information,
    nats_to_bits,
)
from .twolevel import (
    InfiniteTemperatureError,
    McConfig,
    McResult,
    TransferRecord,
    TwoLevelGas,
    entropy_exact,
    entropy_stirling,
    log_multiplicity,
    metropolis_sample,
    occupation_from_temperature,
    temperature_closed,
    temperature_numeric,
    transfer_balance,
)
from .bitstream import (
    Bitstream,
    FileStats,
    GeneratorSpec,
    analyze,
    binary_entropy,
    conditional_entropy_rate,
    file_heat_and_entropy,
    file_temperature,
    generate,
    lag1_autocorrelation,
    randomness_test,
    read_bitstream,
    write_bitstream,
)
from .ledger import (
    BroadcastResult,
    ClausiusCheck,
    CombinedLedger,
    broadcast_balance,
    clausius_check,
    combined_balance,
)
from .fiber import (
    AmplifierAudit,
    ChainResult,
    CycleRecord,
    FiberChainConfig,
    StepRecord,
    amplifier_entropy_balance,
    amplifier_work,
    carnot_efficiency,
    simulate_chain,
)
from .landauer import (
    BoundQuery,
    device_temperature,
    energy_per_bit,
    max_bit_rate,
)

__version__ = "0.1.0"

__all__ = [
    "LN2",
    "K_BOLTZMANN_SI",
    "REDUCED",
    "SI",
    "Energy",
    "Entropy",
    "Information",
    "PhysConstants",
    "Temperature",
    "bits_to_nats",
    "entropy_from_information",
    "nats_to_bits",
    "InfiniteTemperatureError",
    "McConfig",
    "McResult",
    "TransferRecord",
    "TwoLevelGas",
    "entropy_exact",
    "entropy_stirling",
    "log_multiplicity",
    "metropolis_sample",
    "occupation_from_temperature",
    "temperature_closed",
    "temperature_numeric",
    "transfer_balance",
    "Bitstream",
    "FileStats",
    "GeneratorSpec",
    "analyze",
    "binary_entropy",
    "conditional_entropy_rate",
    "file_heat_and_entropy",
    "file_temperature",
    "generate",
    "lag1_autocorrelation",
    "randomness_test",
    "read_bitstream",
    "write_bitstream",
    "BroadcastResult",
    "ClausiusCheck",
    "CombinedLedger",
    "broadcast_balance",
    "clausius_check",
    "combined_balance",
    "AmplifierAudit",
    "ChainResult",
    "CycleRecord",
    "FiberChainConfig",
    "StepRecord",
    "amplifier_entropy_balance",
    "amplifier_work",
    "carnot_efficiency",
    "simulate_chain",
    "BoundQuery",
    "device_temperature",
    "energy_per_bit",
    "max_bit_rate",
]

"""Binary files as frozen two-level gases.

A bitstream is an ordered {0,1} sequence whose disorder is quenched: the
pattern is fixed, unlike a thermal gas where excitations move. Energy is
assigned per "one" bit, so streams of equal ones-density carry equal
energy while carrying very different amounts of information; the
estimators and the equilibrium (randomness) test below quantify that
difference.

Two information estimates are reported side by side and neither is
privileged: the iid plug-in L*H(n/L), and an order-k conditional
block-entropy rate that sees bit-to-bit correlations the iid estimate
cannot.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .core import LN2, REDUCED, Energy, Entropy, Information, PhysConstants, Temperature
from .rng import uniforms

RANDOM = "random"
ORDERED = "ordered"
UNDECIDED = "undecided"

GENERATOR_KINDS = ("bernoulli", "markov", "ordered_block", "alternating")
BIT_ORDERS = ("msb_first", "lsb_first")

#: Minimum stream length for the randomness verdict to be attempted.
MIN_TEST_LENGTH = 64

#: Required samples per order-k context before the conditional rate is
#: reported: L >= 64 * 2**k.
MIN_SAMPLES_PER_CONTEXT = 64

MAX_MARKOV_ORDER = 16


@dataclass(frozen=True, eq=False)
class Bitstream:
    """An ordered bit sequence plus a provenance note."""

    bits: np.ndarray
    source: str = "unknown"

    def __post_init__(self):
        bits = np.ascontiguousarray(self.bits, dtype=np.uint8)
        if bits.ndim != 1 or bits.size < 1:
            raise ValueError("bitstream must be a non-empty 1-d sequence")
        if bits.size and int(bits.max()) > 1:
            raise ValueError("bitstream elements must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @property
    def length(self) -> int:
        return int(self.bits.size)

    @property
    def ones(self) -> int:
        return int(self.bits.sum())


@dataclass(frozen=True)
class FileStats:
    """Summary statistics of one stream.

    ``info_rate_markov`` is the order-``markov_order`` conditional entropy
    rate in nats per bit, or None when the stream is too short for that
    order to be estimated.
    """

    length: int
    ones: int
    p_hat: float
    info_iid: Information
    info_rate_markov: float | None
    markov_order: int
    equilibrium: str
    correlation_lag1: float


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for a synthetic corpus.

    kinds: bernoulli (iid ones-probability ``p``), markov (flip the
    previous bit with probability ``q``; stationary ones-density 1/2 for
    every q, so corpora differ in information at equal energy),
    ordered_block (L/2 ones then zeros), alternating (0101...).
    """

    kind: str
    length: int
    seed: int = 0
    p: float | None = None
    q: float | None = None

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.length < 1:
            raise ValueError("length must be positive")
        if not 0 <= self.seed <= 0xFFFFFFFFFFFFFFFF:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.kind == "bernoulli":
            if self.p is None or not 0 <= self.p <= 1:
                raise ValueError("bernoulli requires p in [0, 1]")
        if self.kind == "markov":
            if self.q is None or not 0 <= self.q <= 1:
                raise ValueError("markov requires flip probability q in [0, 1]")

    def describe(self) -> str:
        params = {"bernoulli": f"p={self.p},seed={self.seed}",
                  "markov": f"q={self.q},seed={self.seed}",
                  "ordered_block": "",
                  "alternating": ""}[self.kind]
        inner = f"{params}," if params else ""
        return f"generated:{self.kind}({inner}length={self.length})"


def generate(spec: GeneratorSpec) -> Bitstream:
    """Deterministically generate the stream described by ``spec``.

    Uniform draws come from the seeded splitmix64 stream, one per bit in
    order, so output is bit-identical across runs and platforms.
    """
    L = spec.length
    if spec.kind == "bernoulli":
        bits = (uniforms(spec.seed, L) < spec.p).astype(np.uint8)
    elif spec.kind == "markov":
        u = uniforms(spec.seed, L)
        first = np.uint8(u[0] < 0.5)
        flips = (u[1:] < spec.q).astype(np.uint8)
        bits = np.empty(L, dtype=np.uint8)
        bits[0] = first
        if L > 1:
            bits[1:] = (first + np.cumsum(flips, dtype=np.int64)) % 2
    elif spec.kind == "ordered_block":
        bits = np.zeros(L, dtype=np.uint8)
        bits[: L // 2] = 1
    else:  # alternating
        bits = (np.arange(L, dtype=np.int64) % 2).astype(np.uint8)
    return Bitstream(bits=bits, source=spec.describe())


def read_bitstream(path: str | os.PathLike, bit_order: str = "msb_first") -> Bitstream:
    """Unpack a raw binary file into bits, 8 per byte, in the given order."""
    if bit_order not in BIT_ORDERS:
        raise ValueError(f"bit_order must be one of {BIT_ORDERS}")
    data = np.fromfile(path, dtype=np.uint8)
    if data.size == 0:
        raise ValueError(f"file {path!s} is empty")
    order = "big" if bit_order == "msb_first" else "little"
    return Bitstream(bits=np.unpackbits(data, bitorder=order), source=f"file:{path}")


def write_bitstream(stream: Bitstream, path: str | os.PathLike, bit_order: str = "msb_first") -> None:
    """Pack a stream back to raw bytes. Length must be a multiple of 8."""
    if bit_order not in BIT_ORDERS:
        raise ValueError(f"bit_order must be one of {BIT_ORDERS}")
    if stream.length % 8 != 0:
        raise ValueError("stream length must be a multiple of 8 to write raw bytes")
    order = "big" if bit_order == "msb_first" else "little"
    np.packbits(stream.bits, bitorder=order).tofile(path)


def binary_entropy(p: float) -> float:
    """H(p) = -p ln p - (1-p) ln(1-p) in nats, with 0 ln 0 = 0."""
    if not 0 <= p <= 1:
        raise ValueError("probability must lie in [0, 1]")
    h = 0.0
    if p > 0:
        h -= p * math.log(p)
    if p < 1:
        h -= (1 - p) * math.log(1 - p)
    return h


def lag1_autocorrelation(stream: Bitstream) -> float:
    """Sample autocorrelation of adjacent bits; 0 for constant streams."""
    x = stream.bits.astype(np.float64)
    x -= x.mean()
    denom = float(np.dot(x, x))
    if denom == 0.0 or x.size < 2:
        return 0.0
    return float(np.dot(x[:-1], x[1:]) / denom)


def conditional_entropy_rate(stream: Bitstream, order: int) -> float:
    """Plug-in conditional block-entropy rate of the given order, nats/bit.

    Counts (order+1)-grams over all L cyclic (wrap-around) windows and
    conditions each final bit on its order-bit context. Cyclic windows
    make the empirical block distributions consistent across orders, so
    the rate is exactly non-increasing in the order and never exceeds
    ln 2. Order 0 reduces to the iid plug-in H(n/L).
    """
    if not 0 <= order <= MAX_MARKOV_ORDER:
        raise ValueError(f"markov order must lie in [0, {MAX_MARKOV_ORDER}]")
    bits = stream.bits
    L = bits.size
    if order == 0:
        return binary_entropy(float(bits.mean()))
    if L < order + 1:
        raise ValueError("stream shorter than the block size")
    extended = np.concatenate([bits, bits[:order]])
    code = np.zeros(L, dtype=np.int64)
    for j in range(order + 1):
        code = (code << 1) | extended[j : L + j]
    counts = np.bincount(code, minlength=2 ** (order + 1)).astype(np.float64)
    context = counts.reshape(-1, 2).sum(axis=1)
    ctx_rep = np.repeat(context, 2)
    mask = counts > 0
    h = np.sum(counts[mask] * (np.log(ctx_rep[mask]) - np.log(counts[mask])))
    return float(h / L)


def randomness_test(stream: Bitstream) -> str:
    """Classify a stream as random, ordered, or undecided.

    Random requires both the ones-density and the lag-1 autocorrelation to
    sit inside their three-sigma binomial bands; ordered means either
    statistic exceeds its five-sigma band; anything between is undecided.
    """
    L = stream.length
    if L < MIN_TEST_LENGTH:
        raise ValueError(f"stream too short to test (need {MIN_TEST_LENGTH} bits)")
    sqrt_l = math.sqrt(L)
    dev_p = abs(stream.ones / L - 0.5)
    dev_r = abs(lag1_autocorrelation(stream))
    sigma_p = 0.5 / sqrt_l
    sigma_r = 1.0 / sqrt_l
    if dev_p <= 3 * sigma_p and dev_r <= 3 * sigma_r:
        return RANDOM
    if dev_p > 5 * sigma_p or dev_r > 5 * sigma_r:
        return ORDERED
    return UNDECIDED


def analyze(stream: Bitstream, markov_order: int = 3) -> FileStats:
    """Full per-stream statistics.

    The order-k conditional rate is only reported when the stream offers
    at least 64 samples per context (L >= 64 * 2**k); it is None
    otherwise. The equilibrium verdict is undecided for streams too short
    to test.
    """
    if not 0 <= markov_order <= MAX_MARKOV_ORDER:
        raise ValueError(f"markov order must lie in [0, {MAX_MARKOV_ORDER}]")
    L = stream.length
    n = stream.ones
    p_hat = n / L
    rate = None
    if L >= MIN_SAMPLES_PER_CONTEXT * (2 ** markov_order):
        rate = conditional_entropy_rate(stream, markov_order)
    verdict = randomness_test(stream) if L >= MIN_TEST_LENGTH else UNDECIDED
    return FileStats(
        length=L,
        ones=n,
        p_hat=p_hat,
        info_iid=Information(L * binary_entropy(p_hat)),
        info_rate_markov=rate,
        markov_order=markov_order,
        equilibrium=verdict,
        correlation_lag1=lag1_autocorrelation(stream),
    )


def file_temperature(epsilon: float, consts: PhysConstants = REDUCED) -> Temperature:
    """Temperature of a random file of bit energy epsilon: eps/(2 k ln 2).

    Meaningful only in equilibrium (a random stream); the caller asserts
    that. The average nat energy eps/(2 ln 2) then equals kT identically.
    """
    if not epsilon > 0:
        raise ValueError("bit energy must be positive")
    return Temperature(epsilon / (2.0 * consts.k_boltzmann * LN2))


def average_nat_energy(epsilon: float) -> float:
    """Energy per nat of a random file: eps / (2 ln 2)."""
    if not epsilon > 0:
        raise ValueError("bit energy must be positive")
    return epsilon / (2.0 * LN2)


def file_heat_and_entropy(length: int, epsilon: float) -> tuple[Energy, Entropy]:
    """Heat and entropy carried by a random file: (L eps / 2, L ln 2 k).

    Their ratio reproduces the file temperature exactly.
    """
    if length < 1:
        raise ValueError("length must be positive")
    if not epsilon > 0:
        raise ValueError("bit energy must be positive")
    return Energy(length * epsilon / 2.0), Entropy(length * LN2)

"""Seeded generation of big-integer test matrices.

Matrices follow the recipe ``basic @ diag(10**e_1, ..., 10**e_n) + small``
with ``basic`` entries in a narrow range (default -99..99) and ``small``
entries in a wider one (default -999..999). Randomness comes from SplitMix64
so every matrix is reproducible from ``(GENERATOR_ID, seed, config)``.

SplitMix64, all arithmetic modulo 2**64::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

Uniform integers on ``[lo, hi]`` use rejection: with ``span = hi - lo + 1``,
draws ``x >= 2**64 - (2**64 % span)`` are discarded and ``lo + x % span`` is
returned otherwise. Within one matrix, entries are drawn row-major; for a big
matrix all of ``basic`` is drawn before ``small`` from the same stream.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatch, InvalidRange
from .fixture import PAPER_EXPONENTS
from .matrix import IntMatrix, mat_add, scale_columns

GENERATOR_ID = "splitmix64"

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 output finaliser."""
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class Prng:
    """Single-owner SplitMix64 stream."""

    generator_id = GENERATOR_ID

    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK64:
            raise InvalidRange(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN_GAMMA) & _MASK64
        return mix64(self.state)


def derive_seed(base_seed: int, index: int) -> int:
    """Seed for independent task ``index`` of a run started from ``base_seed``.

    ``mix64(base_seed + (index + 1) * GOLDEN_GAMMA mod 2**64)``, i.e. the
    ``index``-th output of a SplitMix64 stream seeded with ``base_seed``.
    """
    return mix64((base_seed + (index + 1) * _GOLDEN_GAMMA) & _MASK64)


def sample_uniform(p: Prng, lo: int, hi: int) -> int:
    if lo > hi:
        raise InvalidRange(f"empty range [{lo}, {hi}]")
    span = hi - lo + 1
    if span > 1 << 64:
        raise InvalidRange(f"range [{lo}, {hi}] wider than 2**64")
    limit = (1 << 64) - (1 << 64) % span
    while True:
        x = p.next_u64()
        if x < limit:
            return lo + x % span


def default_exponents(n: int) -> tuple[int, ...]:
    """The reference 14 exponents, truncated or extended by repeating the last gap."""
    if n <= len(PAPER_EXPONENTS):
        return PAPER_EXPONENTS[:n]
    gap = PAPER_EXPONENTS[-1] - PAPER_EXPONENTS[-2]
    extra = n - len(PAPER_EXPONENTS)
    return PAPER_EXPONENTS + tuple(PAPER_EXPONENTS[-1] + gap * (i + 1) for i in range(extra))


@dataclass(frozen=True)
class GenConfig:
    seed: int
    n: int = 14
    basic_range: tuple[int, int] = (-99, 99)
    small_range: tuple[int, int] = (-999, 999)
    exponents: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not 0 <= self.seed <= _MASK64:
            raise InvalidRange(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.n < 1:
            raise DimensionMismatch(f"n must be positive, got {self.n}")
        for name in ("basic_range", "small_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise InvalidRange(f"{name}: empty range [{lo}, {hi}]")
        if not self.exponents:
            object.__setattr__(self, "exponents", default_exponents(self.n))
        else:
            object.__setattr__(self, "exponents", tuple(self.exponents))
        if len(self.exponents) != self.n:
            raise DimensionMismatch(f"{len(self.exponents)} exponents for n={self.n}")
        if any(e < 0 for e in self.exponents):
            raise InvalidRange("exponents must be nonnegative")

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "n": self.n,
            "basic_range": list(self.basic_range),
            "small_range": list(self.small_range),
            "exponents": list(self.exponents),
        }


def gen_basic_matrix(p: Prng, n: int, range_: tuple[int, int]) -> IntMatrix:
    if n < 1:
        raise DimensionMismatch(f"n must be positive, got {n}")
    lo, hi = range_
    if lo > hi:
        raise InvalidRange(f"empty range [{lo}, {hi}]")
    return IntMatrix(n, n, tuple(sample_uniform(p, lo, hi) for _ in range(n * n)))


def compose_big_matrix(basic: IntMatrix, exponents, small: IntMatrix) -> IntMatrix:
    """``basic @ diag(10**e for e in exponents) + small``."""
    if not basic.is_square or (basic.rows, basic.cols) != (small.rows, small.cols):
        raise DimensionMismatch("basic and small must be square and of equal size")
    if len(exponents) != basic.cols:
        raise DimensionMismatch(f"{len(exponents)} exponents for n={basic.cols}")
    return mat_add(scale_columns(basic, [10**e for e in exponents]), small)


def generate(config: GenConfig) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(basic, small, big)`` for ``config``."""
    p = Prng(config.seed)
    basic = gen_basic_matrix(p, config.n, config.basic_range)
    small = gen_basic_matrix(p, config.n, config.small_range)
    return basic, small, compose_big_matrix(basic, config.exponents, small)

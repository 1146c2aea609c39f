"""Bit-exact pseudorandom generator cores.

Eight generators share one wire representation: a state is an ordered
sequence of unsigned 64-bit words, and 32-bit generators keep their lanes
in the low halves of those words. Stepping never mutates a caller's state;
`fill` and `next` return successor states.

Generator parameterization (published reference constants):

* xorshift32       Marsaglia, shift triple (13, 17, 5), 1 word
* xorshift64       Marsaglia, shift triple (13, 7, 17), 1 word
* xorshift128      Marsaglia xor128, shifts (11, 8, 19), four 32-bit lanes
                   packed into 2 words (lane order x, y, z, w = lo/hi, lo/hi)
* xorshift128plus  Vigna, shifts (23, 17, 26), output = new s1 + s0, 2 words
* pcg32            PCG-XSH-RR 64/32, multiplier 6364136223846793005;
                   seeded from (initstate, initseq), stored as (state, inc)
* kiss             KISS99: CONG (69069, 12345), SHR3 (13, 17, 5),
                   MWC (36969, 18000), output (MWC ^ CONG) + SHR3;
                   word order (z, w, jsr, jcong)
* splitmix64       Weyl increment 0x9E3779B97F4A7C15 with the standard
                   two-multiply finalizer; doubles as the seed expander
* mt19937_64       standard 64-bit Mersenne Twister; state is the 312-word
                   vector plus one index word (312 marks "twist pending")
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

MASK32 = 0xFFFFFFFF
MASK64 = 0xFFFFFFFFFFFFFFFF

GOLDEN_GAMMA = 0x9E3779B97F4A7C15

_PCG_MULT = 6364136223846793005

_MT_N = 312
_MT_M = 156
_MT_MATRIX_A = 0xB5026F5AA96619E9
_MT_UPPER = 0xFFFFFFFF80000000
_MT_LOWER = 0x7FFFFFFF

_INV_2_53 = 2.0 ** -53
_INV_2_32 = 2.0 ** -32


class CrandError(Exception):
    """Base for all errors raised by this package."""


class WrongSeedCount(CrandError):
    """Seed word list has the wrong length for the generator."""


class DegenerateSeed(CrandError):
    """Seed is a fixed point of the recurrence (all-zero xorshift state)."""


@dataclass(frozen=True)
class GeneratorKind:
    """Static description of one algorithm.

    `seed_words` is the user-facing seed length accepted by `new_state`;
    `state_words` is the internal state length (they differ only for
    mt19937_64, whose single seed word expands to 313 state words).
    """

    name: str
    seed_words: int
    output_bits: int
    state_words: int
    xorshift_family: bool


KINDS: tuple[GeneratorKind, ...] = (
    GeneratorKind("xorshift32", 1, 32, 1, True),
    GeneratorKind("xorshift64", 1, 64, 1, True),
    GeneratorKind("xorshift128", 2, 32, 2, True),
    GeneratorKind("xorshift128plus", 2, 64, 2, True),
    GeneratorKind("pcg32", 2, 32, 2, False),
    GeneratorKind("kiss", 4, 32, 4, False),
    GeneratorKind("splitmix64", 1, 64, 1, False),
    GeneratorKind("mt19937_64", 1, 64, _MT_N + 1, False),
)

KIND_BY_NAME: dict[str, GeneratorKind] = {k.name: k for k in KINDS}

# Stable ABI identifiers, position in KINDS == id.
KIND_ID: dict[str, int] = {k.name: i for i, k in enumerate(KINDS)}


class GeneratorState(NamedTuple):
    """The full internal state of one generator instance."""

    kind: GeneratorKind
    words: tuple[int, ...]


class OutputWord(NamedTuple):
    """One raw generator output and its width."""

    value: int
    bits: int


def required_seed_words(kind: GeneratorKind) -> int:
    """User-facing seed word count (not the expanded internal size)."""
    return kind.seed_words


# ---------------------------------------------------------------------------
# step functions: mutate a state word list in place, return one output

def _step_xorshift32(w: list[int]) -> int:
    x = w[0]
    x ^= (x << 13) & MASK32
    x ^= x >> 17
    x ^= (x << 5) & MASK32
    w[0] = x
    return x


def _step_xorshift64(w: list[int]) -> int:
    x = w[0]
    x ^= (x << 13) & MASK64
    x ^= x >> 7
    x ^= (x << 17) & MASK64
    w[0] = x
    return x


def _step_xorshift128(wd: list[int]) -> int:
    w0, w1 = wd
    x = w0 & MASK32
    z = w1 & MASK32
    w = w1 >> 32
    t = x ^ ((x << 11) & MASK32)
    t ^= t >> 8
    wn = (w ^ (w >> 19)) ^ t
    # lanes rotate (x, y, z, w) -> (y, z, w, new)
    wd[0] = (w0 >> 32) | (z << 32)
    wd[1] = w | (wn << 32)
    return wn


def _step_xorshift128plus(w: list[int]) -> int:
    s1 = w[0]
    s0 = w[1]
    w[0] = s0
    s1 ^= (s1 << 23) & MASK64
    s1 ^= s0 ^ (s1 >> 17) ^ (s0 >> 26)
    w[1] = s1
    return (s1 + s0) & MASK64


def _step_pcg32(w: list[int]) -> int:
    old = w[0]
    w[0] = (old * _PCG_MULT + w[1]) & MASK64
    xorshifted = (((old >> 18) ^ old) >> 27) & MASK32
    rot = old >> 59
    return ((xorshifted >> rot) | (xorshifted << ((-rot) & 31))) & MASK32


def _step_kiss(wd: list[int]) -> int:
    z, w, jsr, jcong = wd
    z = (36969 * (z & 65535) + (z >> 16)) & MASK32
    w = (18000 * (w & 65535) + (w >> 16)) & MASK32
    mwc = ((z << 16) + w) & MASK32
    jcong = (69069 * jcong + 12345) & MASK32
    jsr ^= (jsr << 13) & MASK32
    jsr ^= jsr >> 17
    jsr ^= (jsr << 5) & MASK32
    wd[0] = z
    wd[1] = w
    wd[2] = jsr
    wd[3] = jcong
    return ((mwc ^ jcong) + jsr) & MASK32


def _step_splitmix64(w: list[int]) -> int:
    x = (w[0] + GOLDEN_GAMMA) & MASK64
    w[0] = x
    z = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def _mt_twist(w: list[int]) -> None:
    for i in range(_MT_N):
        x = (w[i] & _MT_UPPER) | (w[(i + 1) % _MT_N] & _MT_LOWER)
        xa = x >> 1
        if x & 1:
            xa ^= _MT_MATRIX_A
        w[i] = w[(i + _MT_M) % _MT_N] ^ xa


def _step_mt19937_64(w: list[int]) -> int:
    i = w[_MT_N]
    if i >= _MT_N:
        _mt_twist(w)
        i = 0
    x = w[i]
    w[_MT_N] = i + 1
    x ^= (x >> 29) & 0x5555555555555555
    x ^= (x << 17) & 0x71D67FFFEDA60000
    x ^= (x << 37) & 0xFFF7EEE000000000
    x ^= x >> 43
    return x


_STEP: dict[str, Callable[[list[int]], int]] = {
    "xorshift32": _step_xorshift32,
    "xorshift64": _step_xorshift64,
    "xorshift128": _step_xorshift128,
    "xorshift128plus": _step_xorshift128plus,
    "pcg32": _step_pcg32,
    "kiss": _step_kiss,
    "splitmix64": _step_splitmix64,
    "mt19937_64": _step_mt19937_64,
}


# ---------------------------------------------------------------------------
# state construction

def _init_identity64(u: Sequence[int]) -> tuple[int, ...]:
    return tuple(v & MASK64 for v in u)


def _init_identity32(u: Sequence[int]) -> tuple[int, ...]:
    return tuple(v & MASK32 for v in u)


def _init_pcg32(u: Sequence[int]) -> tuple[int, ...]:
    initstate, initseq = (v & MASK64 for v in u)
    inc = ((initseq << 1) | 1) & MASK64
    state = inc  # one LCG advance from zero
    state = (state + initstate) & MASK64
    state = (state * _PCG_MULT + inc) & MASK64
    return (state, inc)


def _init_mt19937_64(u: Sequence[int]) -> tuple[int, ...]:
    mt = [0] * (_MT_N + 1)
    mt[0] = u[0] & MASK64
    for i in range(1, _MT_N):
        prev = mt[i - 1]
        mt[i] = (6364136223846793005 * (prev ^ (prev >> 62)) + i) & MASK64
    mt[_MT_N] = _MT_N
    return tuple(mt)


_INIT: dict[str, Callable[[Sequence[int]], tuple[int, ...]]] = {
    "xorshift32": _init_identity32,
    "xorshift64": _init_identity64,
    "xorshift128": _init_identity64,
    "xorshift128plus": _init_identity64,
    "pcg32": _init_pcg32,
    "kiss": _init_identity32,
    "splitmix64": _init_identity64,
    "mt19937_64": _init_mt19937_64,
}


def new_state(kind: GeneratorKind, user_words: Sequence[int]) -> GeneratorState:
    """Construct the full internal state from user seed words.

    Identity copy for the xorshift family and kiss (masked to lane width),
    LCG-advance initialization for pcg32, 312-word expansion for mt19937_64.

    Raises WrongSeedCount on a length mismatch and DegenerateSeed when an
    all-zero state would result for an xorshift-family kind.
    """
    if len(user_words) != kind.seed_words:
        raise WrongSeedCount(
            f"{kind.name} takes {kind.seed_words} seed word(s), got {len(user_words)}"
        )
    words = _INIT[kind.name](user_words)
    if kind.xorshift_family and not any(words):
        raise DegenerateSeed(f"all-zero seed is a fixed point of {kind.name}")
    return GeneratorState(kind, words)


def seed_expand(seed: int, count: int) -> list[int]:
    """Expand one 64-bit seed into `count` words by successive splitmix64 steps.

    Deterministic; never returns an all-zero sequence (the start point is
    bumped by the golden gamma and retried in that vanishingly rare case).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    x = seed & MASK64
    while True:
        state = [x]
        words = [_step_splitmix64(state) for _ in range(count)]
        if any(words):
            return words
        x = (x + GOLDEN_GAMMA) & MASK64


# ---------------------------------------------------------------------------
# stepping

def next(state: GeneratorState) -> tuple[OutputWord, GeneratorState]:
    """One step of the recurrence: next raw output plus the successor state."""
    words = list(state.words)
    value = _STEP[state.kind.name](words)
    return (
        OutputWord(value, state.kind.output_bits),
        GeneratorState(state.kind, tuple(words)),
    )


def fill(state: GeneratorState, n: int) -> tuple[list[int], GeneratorState]:
    """Generate `n` raw outputs; element i equals the i-th application of next."""
    if n < 0:
        raise ValueError("n must be >= 0")
    words = list(state.words)
    step = _STEP[state.kind.name]
    out = [step(words) for _ in range(n)]
    return out, GeneratorState(state.kind, tuple(words))


def normalize(value: int, bits: int = 64) -> float:
    """Map a raw w-bit output into [0, 1), strictly below 1.

    64-bit values keep their top 53 bits: (value >> 11) * 2**-53; 32-bit
    values map as value * 2**-32. Monotone non-decreasing in `value`.
    """
    if bits == 64:
        return (value >> 11) * _INV_2_53
    return value * _INV_2_32

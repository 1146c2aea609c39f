"""Desk-scale statistical diagnostics and throughput measurement.

These are quick correctness screens, not a replacement for the heavyweight
external randomness batteries; streams for those are produced by the CLI's
binary output mode.
"""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass

import numpy as np

from crand.core import KIND_BY_NAME, CrandError, GeneratorKind, seed_expand


class TooShort(CrandError):
    """Input series is too short for the requested statistic."""


class ZeroVariance(CrandError):
    """Series is constant; correlation is undefined."""


class BadBinCount(CrandError):
    """Bin count must be a power of two, at least 2."""


@dataclass
class AcfSeries:
    """Sample autocorrelation coefficients r_1..r_max_lag."""

    max_lag: int
    values: np.ndarray


@dataclass
class UniformityResult:
    bins: int
    statistic: float
    p_value: float


@dataclass
class BenchReport:
    kind: str
    n: int
    reps: int
    mean_us: float
    stddev_us: float
    checksum: int


def acf(series, max_lag: int) -> AcfSeries:
    """Sample ACF: r_k = sum((x_i - m)(x_{i+k} - m)) / sum((x_i - m)^2).

    r_0 would be 1 by construction and is not emitted.
    """
    x = np.asarray(series, dtype=np.float64)
    n = x.size
    if max_lag < 1:
        raise ValueError("max_lag must be >= 1")
    if n < max_lag + 2:
        raise TooShort(f"need at least {max_lag + 2} samples, got {n}")
    dev = x - x.mean()
    denom = float(np.dot(dev, dev))
    if denom == 0.0:
        raise ZeroVariance("constant series has no autocorrelation")
    values = np.empty(max_lag)
    for k in range(1, max_lag + 1):
        values[k - 1] = float(np.dot(dev[:-k], dev[k:])) / denom
    return AcfSeries(max_lag, values)


def lag_pairs(series, k: int) -> np.ndarray:
    """Coordinate pairs (x_i, x_{i+k}); k = 0 gives the diagonal."""
    x = np.asarray(series, dtype=np.float64)
    if k < 0:
        raise ValueError("lag must be >= 0")
    if x.size <= k:
        raise TooShort(f"need more than {k} samples, got {x.size}")
    if k == 0:
        return np.column_stack((x, x))
    return np.column_stack((x[:-k], x[k:]))


# ---------------------------------------------------------------------------
# chi-square survival function, no external stats dependency
#
# Regularized incomplete gamma via the usual series / continued-fraction
# split at x = a + 1 (Lentz's method for the fraction). Absolute accuracy
# is well inside 1e-8 over the chi-square ranges used here; checked against
# an independent implementation in the test suite.

_GAMMA_EPS = 1e-16
_GAMMA_MAX_ITER = 10_000


def _gamma_p_series(a: float, x: float) -> float:
    ap = a
    total = term = 1.0 / a
    for _ in range(_GAMMA_MAX_ITER):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _GAMMA_EPS:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _gamma_q_cf(a: float, x: float) -> float:
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, _GAMMA_MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _GAMMA_EPS:
            break
    return h * math.exp(-x + a * math.log(x) - math.lgamma(a))


def gamma_q(a: float, x: float) -> float:
    """Upper regularized incomplete gamma Q(a, x)."""
    if a <= 0.0:
        raise ValueError("a must be positive")
    if x < 0.0:
        raise ValueError("x must be non-negative")
    if x == 0.0:
        return 1.0
    if x < a + 1.0:
        return 1.0 - _gamma_p_series(a, x)
    return _gamma_q_cf(a, x)


def chi2_sf(statistic: float, df: int) -> float:
    """Chi-square survival function P(X >= statistic) with df degrees."""
    return gamma_q(df / 2.0, statistic / 2.0)


def chi_square_uniform(words, bins: int, word_bits: int = 64) -> UniformityResult:
    """Uniformity of raw outputs over `bins` equiprobable cells.

    Cells are the top log2(bins) bits of each word, avoiding the weak low
    bits of congruential components.
    """
    if bins < 2 or bins & (bins - 1):
        raise BadBinCount(f"bins must be a power of two >= 2, got {bins}")
    w = np.asarray(words, dtype=np.uint64)
    n = w.size
    if n < 10 * bins:
        raise TooShort(f"need at least {10 * bins} words for {bins} bins, got {n}")
    shift = word_bits - bins.bit_length() + 1
    idx = (w >> np.uint64(shift)).astype(np.int64)
    counts = np.bincount(idx, minlength=bins)
    expected = n / bins
    statistic = float(((counts - expected) ** 2 / expected).sum())
    return UniformityResult(bins, statistic, chi2_sf(statistic, bins - 1))


def monobit(words, word_bits: int = 64) -> float:
    """Bit-balance z-score: (ones - bits/2) / sqrt(bits/4)."""
    w = np.ascontiguousarray(words, dtype=np.uint64)
    bits = w.size * word_bits
    if bits < 10_000:
        raise TooShort(f"need at least 10^4 bits, got {bits}")
    # high zero bits of narrow outputs contribute no ones, so counting over
    # the full 64-bit words is exact as long as `bits` uses the true width
    ones = int(np.bitwise_count(w).sum())
    return (ones - bits / 2.0) / math.sqrt(bits / 4.0)


def bench_throughput(
    kind: GeneratorKind | str,
    n: int = 10_000,
    reps: int = 7,
    seed_words=None,
) -> BenchReport:
    """Time native buffer fills of size `n` over `reps` runs.

    Each rep restarts from the same state and is checksummed; a checksum
    mismatch between reps means the timing loop measured different work and
    is reported as an error rather than a number.
    """
    from crand import native  # deferred: the compiled library is optional here

    if isinstance(kind, str):
        kind = KIND_BY_NAME[kind]
    if reps < 2:
        raise ValueError("reps must be >= 2 for a standard deviation")
    if n < 1:
        raise ValueError("n must be >= 1")
    lib = native.load()
    if seed_words is None:
        seed_words = seed_expand(0xB_E5EED ^ n, kind.seed_words)
    state0 = native.init_state(lib, kind.name, seed_words)

    times_us = []
    checksums = set()
    for _ in range(reps):
        state = (native.c_uint64 * len(state0))(*state0)
        out = (native.c_uint64 * n)()
        t0 = time.perf_counter_ns()
        status = lib.crand_fill(native.KIND_ID[kind.name], state, len(state0), out, n)
        t1 = time.perf_counter_ns()
        native.check_status(status)
        times_us.append((t1 - t0) / 1000.0)
        checksums.add(int(np.ctypeslib.as_array(out).sum()))  # consume the buffer
    if len(checksums) != 1:
        raise RuntimeError("bench reps produced differing checksums")
    return BenchReport(
        kind=kind.name,
        n=n,
        reps=reps,
        mean_us=statistics.fmean(times_us),
        stddev_us=statistics.stdev(times_us),
        checksum=checksums.pop(),
    )

"""Statistical diagnostics: analytic cases, invariances, oracle comparisons."""

import math

import numpy as np
import pytest
import scipy.stats
from hypothesis import given, settings, strategies as st

from crand import analysis, core, native

floats_list = st.lists(
    st.floats(min_value=-1e6, max_value=1e6, allow_nan=False),
    min_size=8,
    max_size=60,
)


# ---------------------------------------------------------------------------
# acf

def test_acf_alternating_series():
    # zero-mean alternating series of length 4: r_1 = -(n-1)/n = -0.75
    result = analysis.acf([1.0, -1.0, 1.0, -1.0], 1)
    assert result.values[0] == pytest.approx(-0.75, abs=1e-15)


def test_acf_linear_ramp():
    # deviations (-2,-1,0,1,2): numerator 4, denominator 10
    result = analysis.acf([1, 2, 3, 4, 5], 1)
    assert result.values[0] == pytest.approx(0.4, abs=1e-15)


def test_acf_shape_and_r0_not_emitted():
    result = analysis.acf(np.linspace(0, 1, 100), 10)
    assert result.max_lag == 10
    assert len(result.values) == 10


def test_acf_errors():
    with pytest.raises(analysis.ZeroVariance):
        analysis.acf([3.0] * 50, 2)
    with pytest.raises(analysis.TooShort):
        analysis.acf([1.0, 2.0, 1.5], 2)
    with pytest.raises(ValueError):
        analysis.acf([1.0, 2.0, 1.5, 0.5], 0)


@settings(deadline=None, max_examples=50)
@given(
    st.lists(
        st.floats(min_value=-100.0, max_value=100.0, allow_nan=False),
        min_size=8,
        max_size=60,
    ),
    st.floats(min_value=-1000.0, max_value=1000.0, allow_nan=False),
)
def test_acf_mean_shift_invariance(xs, shift):
    # spread must survive the shift in float64 for the comparison to be fair
    xs = list(xs)
    xs[0] = max(xs[1:]) + 1.0
    base = analysis.acf(xs, 3).values
    shifted = analysis.acf([x + shift for x in xs], 3).values
    assert np.allclose(base, shifted, atol=1e-6)


@settings(deadline=None, max_examples=50)
@given(floats_list)
def test_acf_bounded_by_one(xs):
    # squared deviations of subnormal spreads underflow, so force a spread
    # of at least 1 by making the head strictly dominate the rest
    xs = list(xs)
    xs[0] = max(xs[1:]) + 1.0
    values = analysis.acf(xs, 5).values
    assert (np.abs(values) <= 1.0 + 1e-12).all()


# ---------------------------------------------------------------------------
# lag pairs

def test_lag_pairs_windowing():
    pairs = analysis.lag_pairs([0.1, 0.2, 0.3], 1)
    assert pairs.tolist() == [[0.1, 0.2], [0.2, 0.3]]
    pairs = analysis.lag_pairs([0.1, 0.2, 0.3], 2)
    assert pairs.tolist() == [[0.1, 0.3]]


def test_lag_pairs_diagonal_at_zero():
    pairs = analysis.lag_pairs([0.5, 0.7], 0)
    assert pairs.tolist() == [[0.5, 0.5], [0.7, 0.7]]


def test_lag_pairs_too_short():
    with pytest.raises(analysis.TooShort):
        analysis.lag_pairs([0.1, 0.2], 2)


# ---------------------------------------------------------------------------
# chi-square

def test_chi_square_perfectly_uniform():
    bins = 16
    # 10 full passes over the bins via the top 4 bits
    words = np.tile(np.arange(bins, dtype=np.uint64) << np.uint64(60), 10)
    result = analysis.chi_square_uniform(words, bins)
    assert result.statistic == 0.0
    assert result.p_value == pytest.approx(1.0)


def test_chi_square_all_mass_in_one_bin():
    words = np.zeros(100, dtype=np.uint64)  # 100 words, bin 0 of 2
    result = analysis.chi_square_uniform(words, 2)
    assert result.statistic == pytest.approx(100.0)
    assert result.p_value < 1e-20


def test_chi_square_permutation_invariance():
    rng = np.random.default_rng(7)
    words = rng.integers(0, 2**64, size=4000, dtype=np.uint64)
    base = analysis.chi_square_uniform(words, 8).statistic
    # relabeling bins = xor of the top bits, a bijection on cells
    relabeled = words ^ np.uint64(0b101 << 61)
    assert analysis.chi_square_uniform(relabeled, 8).statistic == pytest.approx(base)


def test_chi_square_bad_bins():
    words = np.zeros(1000, dtype=np.uint64)
    for bins in (0, 1, 3, 12):
        with pytest.raises(analysis.BadBinCount):
            analysis.chi_square_uniform(words, bins)
    with pytest.raises(analysis.TooShort):
        analysis.chi_square_uniform(words[:10], 2)


@pytest.mark.parametrize("df", [1, 2, 10, 100, 255, 511])
def test_chi2_sf_matches_scipy(df):
    for x in np.linspace(0.0, 4.0 * df + 20.0, 60):
        ours = analysis.chi2_sf(float(x), df)
        ref = scipy.stats.chi2.sf(x, df)
        assert abs(ours - ref) < 1e-8, (df, x)


def test_gamma_q_domain():
    with pytest.raises(ValueError):
        analysis.gamma_q(0.0, 1.0)
    with pytest.raises(ValueError):
        analysis.gamma_q(1.0, -0.5)
    assert analysis.gamma_q(3.0, 0.0) == 1.0


# ---------------------------------------------------------------------------
# monobit

def test_monobit_all_ones():
    words = np.full(1000, 0xFFFFFFFFFFFFFFFF, dtype=np.uint64)
    bits = 1000 * 64
    assert analysis.monobit(words) == pytest.approx(math.sqrt(bits))


def test_monobit_exact_balance():
    words = np.array([0xAAAAAAAAAAAAAAAA, 0x5555555555555555] * 500, dtype=np.uint64)
    assert analysis.monobit(words) == 0.0


def test_monobit_32bit_width():
    # same ones, half the bits: width must come from the argument
    words = np.full(1000, 0xFFFFFFFF, dtype=np.uint64)
    assert analysis.monobit(words, word_bits=32) == pytest.approx(math.sqrt(32000))


def test_monobit_too_short():
    with pytest.raises(analysis.TooShort):
        analysis.monobit(np.zeros(100, dtype=np.uint64))


# ---------------------------------------------------------------------------
# bench

def test_bench_requires_two_reps(lib):
    with pytest.raises(ValueError):
        analysis.bench_throughput("xorshift64", n=100, reps=1)


def test_bench_report_bookkeeping(lib):
    report = analysis.bench_throughput("xorshift64", n=2000, reps=3)
    assert report.kind == "xorshift64"
    assert report.n == 2000
    assert report.reps == 3
    assert report.mean_us > 0.0
    assert report.stddev_us >= 0.0


def test_bench_checksum_stable_for_fixed_seed(lib):
    a = analysis.bench_throughput("pcg32", n=500, reps=2, seed_words=[42, 54])
    b = analysis.bench_throughput("pcg32", n=500, reps=2, seed_words=[42, 54])
    assert a.checksum == b.checksum
    raw, _ = native.fill(lib, "pcg32", core.new_state(
        core.KIND_BY_NAME["pcg32"], [42, 54]).words, 500)
    assert a.checksum == int(raw.sum())

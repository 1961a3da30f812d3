import math
import warnings

import pytest
from hypothesis import given, strategies as st

from dyckmax.deviations import (
    MODERATE_LIMIT, RegimeWarning, cramer_prelimit, gaussian_bounds,
    gaussian_remark_prelimit, h_rate, ld_gaussian_prelimit, md_asymptotic_log,
    md_fixed_n_limit, md_prelimit_sequence, md_rate_prelimit, md_rate_prelimit_exact,
    round_half_away, upper_tail_prob_exact)
from dyckmax.exact_counts import catalan, count_bounded
from dyckmax.spectral import log_spectral_ratio

from oracles import brute_dyck_words, brute_max, exact_tail_fraction


def test_round_half_away():
    assert [round_half_away(v) for v in (0.5, 1.5, 2.5, 2.4999, -0.5)] == [1, 2, 3, 2, -1]


# -- moderate regime ---------------------------------------------------------

def test_md_prelimit_trivial_regime():
    d = md_rate_prelimit(3, 10)
    assert d.prelimit == pytest.approx(0.0, abs=1e-9)
    assert d.limit == -math.pi ** 2


def test_md_prelimit_spectral_matches_big_int():
    for N, n in [(2000, 10), (500, 5), (1200, 17)]:
        a = md_rate_prelimit(N, n).prelimit
        b = md_rate_prelimit_exact(N, n).prelimit
        assert a == pytest.approx(b, abs=1e-9)


def test_md_gap_at_2000_10():
    # measured from exact counts; the quick Eq.-style sketch is not reliable here
    d = md_rate_prelimit_exact(2000, 10)
    assert d.gap == pytest.approx(0.372795, abs=1e-5)
    assert md_rate_prelimit(20000, 10).gap < d.gap


def test_md_fixed_n_limit():
    for n in (5, 10, 30):
        far = md_rate_prelimit(10 ** 9, n).prelimit
        assert far == pytest.approx(md_fixed_n_limit(n), abs=1e-4)
    # the fixed-n limit sits below -pi^2 and approaches it as n grows
    gaps = [md_fixed_n_limit(n) - MODERATE_LIMIT for n in (10, 40, 160, 640)]
    assert all(g < 0 for g in gaps)
    assert all(abs(a) > abs(b) for a, b in zip(gaps, gaps[1:]))
    assert abs(gaps[-1]) < 1e-3


def test_md_rate_reaches_pi_squared_when_n_grows():
    gaps = [md_rate_prelimit(n ** 4, n).gap for n in (10, 20, 40, 80)]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 1e-3


def test_md_sequence_fixed_n10_is_not_monotone():
    gaps = [d.gap for d in md_prelimit_sequence(10, [10 ** 3, 10 ** 4, 10 ** 5])]
    assert gaps == pytest.approx([0.757016, 0.005967, 0.119866], abs=1e-5)


def test_two_term_log_converges_when_N_over_n4_vanishes():
    diffs = [abs(md_asymptotic_log(16 * n * n, n) - log_spectral_ratio(16 * n * n, n))
             for n in (20, 40, 80, 160)]
    assert all(a > b for a, b in zip(diffs, diffs[1:]))
    assert diffs[-1] < 0.011


def test_two_term_log_drifts_at_fixed_n():
    diffs = [md_asymptotic_log(N, 8) - log_spectral_ratio(N, 8)
             for N in (10 ** 3, 10 ** 4, 10 ** 5)]
    assert diffs[0] < diffs[1] < diffs[2]
    # cos^{2N} versus exp: drift per unit N approaches 2 log cos(t) + t^2, t = pi/9
    t = math.pi / 9
    slope = (diffs[2] - diffs[1]) / 9e4
    assert slope == pytest.approx(-(2 * math.log(math.cos(t)) + t * t), rel=1e-3)


def test_md_validation():
    with pytest.raises(ValueError):
        md_rate_prelimit(10, 1)
    with pytest.raises(ValueError):
        md_rate_prelimit(0, 4)


# -- upper tail --------------------------------------------------------------

@pytest.mark.parametrize("N, m, p", [(2, 1, 1 / 2), (3, 2, 1 / 5), (5, 4, 1 / 42)])
def test_upper_tail_examples(N, m, p):
    assert upper_tail_prob_exact(N, m) == pytest.approx(math.log(p), abs=1e-14)


def test_upper_tail_beyond_N():
    assert upper_tail_prob_exact(5, 5) == -math.inf
    assert upper_tail_prob_exact(5, 9) == -math.inf
    assert upper_tail_prob_exact(5, 0) == 0.0


def test_upper_tail_brute_force():
    for N in range(1, 8):
        for m in range(0, N):
            ref = exact_tail_fraction(N, m)
            assert upper_tail_prob_exact(N, m) == pytest.approx(
                math.log(ref.numerator) - math.log(ref.denominator), abs=1e-13)


# -- gaussian regime ---------------------------------------------------------

def test_sandwich_example_50_10():
    d = ld_gaussian_prelimit(50, 10, 1.0)
    b = d.bounds
    assert d.m == 10 and b["lower_level"] == 10
    assert b["lower_count"] <= b["exact_count"] <= b["upper_count"]
    assert b["lower_norm"] <= b["touch_norm"] <= b["upper_norm"]
    assert d.prelimit <= b["touch_norm"]


def test_sandwich_brute_force():
    for N in range(1, 9):
        words = brute_dyck_words(N)
        for m in range(1, N + 1):
            touch = sum(1 for w in words if brute_max(w) >= m)
            b = gaussian_bounds(N, m)
            assert b["exact_count"] == touch
            assert b["lower_count"] <= touch <= b["upper_count"]


def test_sandwich_dp_range():
    for N in range(1, 501, 37):
        for m in range(1, N + 1, max(1, N // 9)):
            b = gaussian_bounds(N, m)
            assert b["lower_count"] <= b["exact_count"] <= b["upper_count"]


def test_gaussian_gap_improves_on_grid():
    a = ld_gaussian_prelimit(900, 100, 0.5)
    b = ld_gaussian_prelimit(2500, 300, 0.5)
    assert (a.m, b.m) == (50, 150)
    assert b.gap < a.gap
    assert a.bounds["bracketed"] and b.bounds["bracketed"]


def test_remark_x1_is_flagged():
    d = gaussian_remark_prelimit(900, 100)
    assert d.extrapolated and d.limit == -2.0
    assert gaussian_remark_prelimit(2500, 300).gap < d.gap


def test_gaussian_regime_warning_and_errors():
    with pytest.warns(RegimeWarning):
        ld_gaussian_prelimit(200, 10, 0.5)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        ld_gaussian_prelimit(100, 10, 0.5)
    with pytest.raises(ValueError):
        ld_gaussian_prelimit(100, 10, 0.01)
    with pytest.raises(ValueError):
        ld_gaussian_prelimit(10, 10, 2.0)


# -- cramer regime -----------------------------------------------------------

def test_h_examples():
    assert h_rate(1e-9) == pytest.approx(0.0, abs=1e-15)
    assert h_rate(0.25) == pytest.approx(-0.75 * math.log(1.5) - 0.25 * math.log(0.5), rel=1e-14)
    assert h_rate(0.25) == pytest.approx(-0.130812, abs=1e-6)
    assert h_rate(0.5) == pytest.approx(-0.693147, abs=1e-6)
    assert h_rate(0.7) == -math.inf
    with pytest.raises(ValueError):
        h_rate(0.0)


def test_h_continuous_at_half():
    gaps = [abs(h_rate(0.5 - e) + math.log(2)) for e in (1e-2, 1e-4, 1e-6)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-4


def test_h_strictly_decreasing():
    xs = [0.5 * k / 101 for k in range(1, 101)]
    vals = [h_rate(x) for x in xs]
    assert all(a > b for a, b in zip(vals, vals[1:]))


@given(st.floats(1e-6, 0.5 - 1e-6))
def test_h_is_a_log_binomial_rate(x):
    # h(x) = -[ (1/2+x) log(1+2x) + (1/2-x) log(1-2x) ] <= 0
    assert h_rate(x) <= 0.0


def test_cramer_examples():
    d = cramer_prelimit(500, 0.25)
    assert d.m == 250 and d.gap < 0.02
    half = cramer_prelimit(500, 0.5)
    assert half.prelimit == pytest.approx(-math.log(catalan(500)) / 1000, rel=1e-14)
    assert half.gap < 0.01
    over = cramer_prelimit(500, 0.6)
    assert over.prelimit == -math.inf and over.limit == -math.inf and over.gap == 0.0


def test_cramer_rejects_bad_input():
    with pytest.raises(ValueError):
        cramer_prelimit(500, 0.0)
    with pytest.raises(ValueError):
        cramer_prelimit(500, 1e-5)

import math

import pytest
from hypothesis import given, settings, strategies as st

from dyckmax.exact_counts import (
    BoundedCountTable, DyckPath, ParityError, SizeLimitError, bounded_count_table,
    catalan, count_at_least, count_bounded, count_bounded_matrix, count_bounded_series,
    count_peak_at_midpoint, count_touch_upper_bound, enumerate_paths, max_height_pmf)

from oracles import (brute_bounded, brute_dyck_words, brute_height_at, brute_max,
                     factorial_catalan)


@pytest.mark.parametrize("N, expected", [(0, 1), (4, 14), (10, 16796)])
def test_catalan_examples(N, expected):
    assert catalan(N) == expected


def test_catalan_matches_enumeration_and_factorials():
    for N in range(0, 9):
        assert catalan(N) == len(brute_dyck_words(N)) == factorial_catalan(N)
    for N in range(0, 300):
        assert catalan(N) == factorial_catalan(N)


def test_catalan_recurrence():
    for N in range(0, 500):
        assert catalan(N + 1) * (N + 2) == catalan(N) * 2 * (2 * N + 1)


def test_catalan_exact_at_large_N():
    c = catalan(5000)
    assert c == factorial_catalan(5000)
    assert c.bit_length() > 9980


@pytest.mark.parametrize("N, n, expected", [(2, 2, 1), (3, 10, 5), (5, 1, 0)])
def test_count_bounded_examples(N, n, expected):
    assert count_bounded(N, n) == expected


@pytest.mark.parametrize("N, n, expected", [(2, 2, 1), (0, 3, 1)])
def test_count_bounded_matrix_examples(N, n, expected):
    assert count_bounded_matrix(N, n) == expected


def test_matrix_and_dp_agree_at_6_3():
    # max <= 2 Dyck paths of length 12, brute force
    assert brute_bounded(6, 3) == 32
    assert count_bounded_matrix(6, 3) == count_bounded(6, 3) == 32


def test_three_way_equality_small():
    for N in range(0, 9):
        words = brute_dyck_words(N)
        for n in range(1, N + 3):
            brute = sum(1 for w in words if brute_max(w) < n)
            assert count_bounded(N, n) == brute == count_bounded_matrix(N, n), (N, n)


def test_dp_matches_matrix_beyond_brute_range():
    for N in (20, 57, 100):
        for n in (2, 3, 7, 15, 40):
            assert count_bounded(N, n) == count_bounded_matrix(N, n)


def test_series_matches_pointwise():
    for n in (1, 2, 5, 13):
        series = count_bounded_series(40, n)
        assert series == [count_bounded(N, n) for N in range(41)]


def test_corollary_grid():
    for N in range(0, 101):
        for n in (N + 1, N + 2, N + 17):
            assert count_bounded(N, n) == catalan(N)


def test_table_rows_and_invariants():
    t = bounded_count_table(4, 3, keep_rows=True)
    assert isinstance(t, BoundedCountTable)
    assert t.entry(0, 0) == 1 and t.entry(0, 1) == 0
    for i in range(8):
        for h in range(3):
            below = t.entry(i, h - 1) if h > 0 else 0
            above = t.entry(i, h + 1) if h + 1 < 3 else 0
            assert t.entry(i + 1, h) == below + above
    assert t.entry(8, 0) == t.count == count_bounded(4, 3)
    with pytest.raises(ValueError):
        bounded_count_table(4, 3).entry(1, 1)


@given(st.integers(0, 40), st.integers(1, 45))
def test_monotone_in_cap(N, n):
    a, b = count_bounded(N, n), count_bounded(N, n + 1)
    assert a <= b
    if n >= N + 1:
        assert a == b


def test_enumerate_examples():
    assert [str(p) for p in enumerate_paths(0)] == [""]
    assert sorted(str(p) for p in enumerate_paths(2)) == ["UDUD", "UUDD"]
    assert len(enumerate_paths(4)) == 14


def test_enumerate_is_complete_and_distinct():
    for N in range(0, 8):
        paths = enumerate_paths(N)
        words = {p.steps for p in paths}
        assert len(words) == len(paths) == catalan(N)
        assert words == set(brute_dyck_words(N))


def test_enumerate_size_guard():
    assert len(enumerate_paths(10)) == 16796
    with pytest.raises(SizeLimitError):
        enumerate_paths(11)


@pytest.mark.parametrize("bad", [(1,), (1, 1), (-1, 1), (1, -1, -1, 1), (1, 2)])
def test_dyck_path_rejects_invalid(bad):
    with pytest.raises(ValueError):
        DyckPath(bad)


def test_dyck_path_helpers():
    p = DyckPath.from_string("UUDUDD")
    assert p.half_length == 3
    assert p.heights() == [0, 1, 2, 1, 2, 1, 0]
    assert p.max_height == 2
    assert str(p) == "UUDUDD" and len(p) == 6


@pytest.mark.parametrize("N, expected", [
    (1, {1: 1}), (2, {1: 1, 2: 1}), (3, {1: 1, 2: 3, 3: 1})])
def test_max_height_pmf_examples(N, expected):
    assert max_height_pmf(N) == expected


def test_max_height_pmf_against_brute_force():
    for N in range(1, 9):
        hist = {}
        for w in brute_dyck_words(N):
            hist[brute_max(w)] = hist.get(brute_max(w), 0) + 1
        pmf = max_height_pmf(N)
        assert {h: c for h, c in pmf.items() if c} == hist


def test_max_height_pmf_sums_to_catalan():
    for N in list(range(1, 60)) + [120, 200]:
        pmf = max_height_pmf(N)
        assert sorted(pmf) == list(range(1, N + 1))
        assert sum(pmf.values()) == catalan(N)


@pytest.mark.parametrize("N, m, expected", [(2, 2, 1), (2, 0, 1), (3, 1, 4)])
def test_peak_at_midpoint_examples(N, m, expected):
    assert count_peak_at_midpoint(N, m) == expected


def test_peak_at_midpoint_brute_force():
    for N in range(1, 8):
        words = brute_dyck_words(N)
        for m in range(0, N + 1):
            if (N + m) % 2:
                with pytest.raises(ParityError, match="even"):
                    count_peak_at_midpoint(N, m)
                continue
            brute = sum(1 for w in words if brute_height_at(w, N) == m)
            assert count_peak_at_midpoint(N, m) == brute


@pytest.mark.parametrize("N, m, expected", [(1, 1, 2), (2, 2, 2), (3, 1, 30)])
def test_touch_upper_bound_examples(N, m, expected):
    assert count_touch_upper_bound(N, m) == expected


def test_touch_bound_dominates_tail():
    for N in range(1, 9):
        words = brute_dyck_words(N)
        for m in range(0, N):
            tail = sum(1 for w in words if brute_max(w) >= m + 1)
            assert catalan(N) - count_bounded(N, m + 1) == tail == count_at_least(N, m + 1)
            assert tail <= count_touch_upper_bound(N, m + 1)


def test_argument_validation():
    with pytest.raises(ValueError):
        catalan(-1)
    with pytest.raises(ValueError):
        count_bounded(3, 0)
    with pytest.raises(ValueError):
        count_bounded_matrix(-1, 2)
    with pytest.raises(ValueError):
        count_touch_upper_bound(3, 4)
    with pytest.raises(ValueError):
        max_height_pmf(0)

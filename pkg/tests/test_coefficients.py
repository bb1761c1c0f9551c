"""Tests for the coefficient algorithms, their cache, and cross-agreement."""
import math
import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polycoeffs.coefficients import (
    CoeffCache,
    CoeffKey,
    binom,
    chi,
    coeff,
    coeff_by_binom_reduction,
    coeff_by_recurrence,
    coeff_by_series,
    multinomial_oracle,
    row,
)
from polycoeffs.errors import NegativeN

# degree-3 triangle rows, k = 0..9
ROWS_DEGREE_3 = {
    -3: [1, -3, 3, -1, 3, -9, 9, -3, 6, -18],
    -2: [1, -2, 1, 0, 2, -4, 2, 0, 3, -6],
    -1: [1, -1, 0, 0, 1, -1, 0, 0, 1, -1],
    0: [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    1: [1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    2: [1, 2, 3, 4, 3, 2, 1, 0, 0, 0],
    3: [1, 3, 6, 10, 12, 12, 10, 6, 3, 1],
}


def test_coeff_key_validates_degree():
    assert CoeffKey(3, 4, 3).m == 3
    with pytest.raises(ValueError):
        CoeffKey(1, 1, 0)


def test_chi_degree_three():
    assert [chi(3, k) for k in range(6)] == [1, -1, 0, 0, 1, -1]


def test_chi_degree_one_alternates():
    assert all(chi(1, k) == (-1) ** k for k in range(12))


def test_chi_degree_zero_is_indicator():
    assert chi(0, 0) == 1
    assert chi(0, 3) == 0


def test_chi_negative_k_is_zero():
    assert chi(3, -1) == 0
    assert chi(0, -2) == 0


def test_chi_rejects_negative_degree():
    with pytest.raises(ValueError):
        chi(-1, 0)


@given(st.integers(0, 6), st.integers(0, 40))
def test_chi_is_periodic(m, k):
    if m > 0:
        assert chi(m, k) == chi(m, k + m + 1)


@given(st.integers(0, 6), st.integers(0, 30))
def test_chi_matches_row_minus_one(m, k):
    if m >= 1:
        assert chi(m, k) == coeff(-1, k, m)


@pytest.mark.parametrize("n,values", sorted(ROWS_DEGREE_3.items()))
def test_degree_three_rows(n, values):
    assert row(n, 3, 9) == values


@pytest.mark.parametrize(
    "fn", [coeff_by_series, coeff_by_recurrence, coeff_by_binom_reduction]
)
def test_all_algorithms_reproduce_degree_three(fn):
    for n, values in ROWS_DEGREE_3.items():
        assert [fn(n, k, 3) for k in range(10)] == values


def test_boundary_clauses():
    assert coeff(0, 0, 2) == 1
    assert coeff(5, -1, 2) == 0
    assert coeff(2, 7, 3) == 0  # beyond the support of a non-negative row
    assert coeff_by_series(0, 0, 2) == 1
    assert coeff_by_series(5, -1, 2) == 0


def test_known_point_values():
    assert coeff(3, 4, 3) == 12
    assert coeff_by_series(-3, 9, 3) == -18
    assert coeff_by_binom_reduction(3, 3, 3) == 10
    assert coeff_by_binom_reduction(-1, 8, 3) == 1
    assert coeff(2, 2, 2) == 3


def test_degree_rejected_below_one():
    for fn in (coeff, coeff_by_series, coeff_by_recurrence, coeff_by_binom_reduction):
        with pytest.raises(ValueError):
            fn(1, 1, 0)


def test_binom_upper_negation():
    assert binom(-2, 2) == 3
    assert binom(-1, 5) == -1
    assert binom(5, 2) == 10
    assert binom(3, -1) == 0


@given(st.integers(-8, 8), st.integers(-2, 25))
def test_degree_one_degenerates_to_binomials(n, k):
    assert coeff(n, k, 1) == binom(n, k)


def test_rows_pad_with_zeros():
    assert row(0, 4, 5) == [1, 0, 0, 0, 0, 0]
    assert row(1, 2, 6) == [1, 1, 1, 0, 0, 0, 0]


def test_row_rejects_negative_limit():
    with pytest.raises(ValueError):
        row(1, 2, -1)


@given(st.integers(0, 8), st.integers(1, 5))
def test_row_symmetry(n, m):
    values = row(n, m, m * n)
    assert values == values[::-1]


@given(st.integers(0, 9), st.integers(1, 5))
def test_row_sums_are_powers(n, m):
    assert sum(row(n, m, m * n)) == (m + 1) ** n


@given(st.integers(-7, 7), st.integers(0, 20), st.integers(1, 4))
def test_four_term_recurrence_all_signs(n, k, m):
    lhs = coeff(n, k, m)
    rhs = (
        coeff(n, k - 1, m)
        + coeff(n - 1, k, m)
        - coeff(n - 1, k - m - 1, m)
    )
    assert lhs == rhs


def test_multinomial_oracle_values():
    assert multinomial_oracle(2, 2, 3) == 3
    assert multinomial_oracle(3, 5, 3) == 12
    assert multinomial_oracle(4, 0, 5) == 1
    assert multinomial_oracle(3, 100, 3) == 0


def test_multinomial_oracle_rejects_negative_rows():
    with pytest.raises(NegativeN):
        multinomial_oracle(-1, 0, 2)


def test_three_way_agreement_sampled():
    for m in range(1, 6):
        for n in range(-5, 6):
            for k in range(0, 18):
                a = coeff_by_series(n, k, m)
                b = coeff_by_recurrence(n, k, m)
                c = coeff_by_binom_reduction(n, k, m)
                assert a == b == c, (n, k, m)


def test_oracle_agreement_sampled():
    for m in range(1, 5):
        for n in range(0, 5):
            for k in range(0, m * n + 1):
                assert multinomial_oracle(n, k, m) == coeff(n, k, m)


def test_cache_transparency():
    warm = CoeffCache()
    for n in (-4, -1, 0, 2, 5):
        for k in range(12):
            first = coeff(n, k, 3, cache=warm)
            again = coeff(n, k, 3, cache=warm)
            cold = coeff(n, k, 3, cache=CoeffCache())
            assert first == again == cold


def test_cache_counts_hits_and_misses():
    cache = CoeffCache()
    coeff(4, 2, 2, cache=cache)
    misses = cache.misses
    coeff(4, 1, 2, cache=cache)
    assert cache.hits >= 1
    assert cache.misses == misses


def test_cache_extends_negative_rows():
    cache = CoeffCache()
    assert coeff(-3, 4, 3, cache=cache) == 3
    # longer request afterwards must extend, not corrupt
    assert row(-3, 3, 9, cache=cache) == ROWS_DEGREE_3[-3]


def test_cache_is_thread_safe():
    cache = CoeffCache()
    expected = row(-6, 3, 40)
    results = []

    def worker():
        results.append(row(-6, 3, 40, cache=cache))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == expected for r in results)


@given(st.integers(1, 5), st.integers(0, 10))
def test_deconvolution_inverts_addition(m, k):
    # row(-1) convolved with the base polynomial gives row(0)
    total = sum(coeff(-1, k - i, m) for i in range(m + 1))
    assert total == (1 if k == 0 else 0)


def test_binom_reduction_matches_math_comb_for_large_values():
    assert coeff_by_binom_reduction(12, 6, 1) == math.comb(12, 6)

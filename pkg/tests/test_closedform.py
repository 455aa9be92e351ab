from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from denumerant import closedform as cf
from denumerant.core import FourCoinParams, InvalidParams, ThreeCoinParams, make_coin_set
from denumerant.oracle import count_table

from oracles import delta_direct, power_sum_direct, series_coefficients


def dp_values(coins, N):
    return count_table(make_coin_set(coins), N).values


@pytest.mark.parametrize(
    "s, k, n, expected",
    [(5, 2, 50, 36), (5, 2, 100, 121), (5, 2, 3, 1), (3, 4, 200, 595)],
)
def test_c_closed_examples(s, k, n, expected):
    assert cf.c_closed(ThreeCoinParams(s, k), n) == expected


def test_c_decomposition():
    d = cf.decompose_c(ThreeCoinParams(5, 3), 77)
    assert (d.L, d.L0, d.j) == (15, 2, 0)
    assert 5 * d.L + d.L0 == 77


@pytest.mark.parametrize("s", [2, 3, 5, 7])
@pytest.mark.parametrize("k", [2, 3, 4, 6])
def test_c_closed_grid(s, k):
    p = ThreeCoinParams(s, k)
    truth = dp_values([1, s, k * s], 600)
    for n in range(601):
        c = cf.c_closed(p, n)
        assert c == truth[n], n
        lower, upper = cf.c_bounds(p, n)
        assert lower <= c <= upper, n
        assert c == cf.c_closed(p, s * (n // s))


def test_c_bounds_examples():
    lower, upper = cf.c_bounds(ThreeCoinParams(5, 2), 100)
    assert (lower, upper) == (108, 121)
    assert cf.c_bounds(ThreeCoinParams(2, 2), 0) == (-2, 1)
    lower, upper = cf.c_bounds(ThreeCoinParams(5, 3), 77)
    assert lower <= 51 <= upper


@pytest.mark.parametrize(
    "args, expected", [((3, 0, 1, 2, 1), 2), ((5, 1, 2, 2, 2), 6), ((4, 2, 3, 3, 1), 10)]
)
def test_power_sum_examples(args, expected):
    assert cf.power_sum_mod(*args) == expected


@given(st.integers(0, 60), st.integers(0, 20), st.integers(0, 12), st.integers(1, 7), st.integers(0, 3))
def test_power_sum_matches_direct(L, M, r, k, a):
    assert cf.power_sum_mod(L, M, r, k, a) == power_sum_direct(L, M, r, k, a)


def test_power_sum_rejects():
    with pytest.raises(InvalidParams):
        cf.power_sum_mod(-1, 0, 1, 2, 1)


def test_delta_examples():
    assert cf.delta(2, 4, 7, 3) == -2
    assert all(cf.delta(2, 4, L, M) == 0 for L in range(10) for M in (0, 2))
    assert cf.delta(2, 5, 6, 2) == Fraction(-6, 8)
    assert cf.delta(3, 5, 9, 2) == Fraction(-4, 3) == delta_direct(3, 5, 9, 2)


def test_delta_grid():
    for k in range(2, 7):
        for r in range(2, 10):
            for L in range(41):
                for M in range(r):
                    assert cf.delta(k, r, L, M) == delta_direct(k, r, L, M), (k, r, L, M)
                    if k == 2:
                        parity = "even" if r % 2 == 0 else "odd"
                        assert cf.delta_k2(parity, L, M) == cf.delta(k, r, L, M)


def test_delta_k2_examples():
    assert cf.delta_k2("even", 7, 3) == -2
    assert cf.delta_k2("even", 7, 2) == 0
    assert cf.delta_k2("odd", 1, 1) == Fraction(-1, 4)
    # table rows for odd r, indexed by (L mod 2, M mod 2)
    for L in range(20):
        for M in range(6):
            row = {(0, 0): -Fraction(L, 8), (0, 1): -Fraction(L + 2, 8),
                   (1, 0): -Fraction(L + 1, 8), (1, 1): -Fraction(L + 1, 8)}
            assert cf.delta_k2("odd", L, M) == row[(L % 2, M % 2)]
    with pytest.raises(InvalidParams):
        cf.delta_k2("neither", 1, 1)


@pytest.mark.parametrize(
    "params, n, expected",
    [((5, 2, 5), 100, 242), ((5, 2, 5), 0, 1), ((2, 3, 5), 777, 674388)],
)
def test_d_closed_examples(params, n, expected):
    assert cf.d_closed(FourCoinParams(*params), n) == expected


def test_d_closed_k2_examples():
    assert cf.d_closed_k2(FourCoinParams(5, 2, 5), 100) == 242
    assert cf.d_closed_k2(FourCoinParams(5, 2, 4), 200) == 1771
    assert cf.d_closed_k2(FourCoinParams(3, 2, 7), 500) == 60022
    with pytest.raises(InvalidParams):
        cf.d_closed_k2(FourCoinParams(2, 3, 5), 10)


def test_d_decomposition():
    d = cf.decompose_d(FourCoinParams(5, 2, 5), 118)
    assert (d.L, d.M, d.L0) == (4, 3, 3)
    assert 5 * (5 * d.L + d.M) + d.L0 == 118


GRID = [(s, k, r) for s in (2, 3, 5) for k in (2, 3) for r in (3, 4, 5, 7) if r > k]


@pytest.mark.parametrize("s, k, r", GRID)
def test_d_closed_grid(s, k, r):
    p = FourCoinParams(s, k, r)
    truth = dp_values([1, s, k * s, r * s], 1000)
    for n in range(1001):
        d = cf.d_closed(p, n)
        assert d == truth[n], n
        assert d == cf.d_closed(p, s * (n // s))
        if k == 2:
            assert cf.d_closed_k2(p, n) == d


def test_odd_r_correction_sign_is_negative():
    # With a leading plus on the k = 2, odd-r correction the grid breaks immediately.
    p = FourCoinParams(5, 2, 5)
    truth = dp_values([1, 5, 10, 25], 300)
    plus_hits = minus_hits = 0
    for n in range(301):
        d = cf.decompose_d(p, n)
        main = cf.d_main_term_k2(p.r, d.L, d.M)
        corr = -cf.delta_k2("odd", d.L, d.M)
        plus_hits += main + corr == truth[n]
        minus_hits += main - corr == truth[n]
    assert minus_hits == 301
    assert plus_hits < 301


def test_us_coins():
    truth = dp_values([1, 5, 10, 25], 2000)
    assert cf.us_coins_count(100) == 242
    assert cf.us_coins_count(0) == 1
    assert cf.us_coins_count(1000) == 142511 == series_coefficients([1, 5, 10, 25], 1000)[1000]
    assert [cf.us_coins_count(n) for n in range(2001)] == list(truth)


def test_asymptotic_leading():
    assert cf.asymptotic_leading(FourCoinParams(5, 2, 5), 1000) == Fraction(400000, 3)
    assert cf.asymptotic_leading(FourCoinParams(2, 2, 3), 600) == 750000
    assert cf.asymptotic_leading(FourCoinParams(2, 2, 3), 0) == 0
    with pytest.raises(InvalidParams):
        cf.asymptotic_leading(FourCoinParams(2, 2, 3), -1)


def test_residual_is_quadratic():
    p = FourCoinParams(2, 3, 5)
    ratios = []
    for n in (100, 1000, 10000):
        residual = abs(cf.d_closed(p, n) - cf.asymptotic_leading(p, n))
        ratios.append(residual / n ** 2)
    assert max(ratios) <= 2 * min(ratios)

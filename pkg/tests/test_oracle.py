import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from denumerant.core import InvalidParams, NegativeAmount, make_coin_set
from denumerant.oracle import bounded_table, count_bounded, count_dp, count_table

from oracles import enumerate_ways, series_coefficients


def test_dollar():
    assert count_dp(make_coin_set([1, 5, 10, 25]), 100) == 242


def test_worked_example_is_thirteen():
    # the four cases (one 5 / one 4 / two 4s / neither) contribute 4, 3, 1, 5
    assert count_dp(make_coin_set([1, 2, 4, 5]), 9) == 13 == enumerate_ways([1, 2, 4, 5], 9)


@pytest.mark.parametrize("coins", [[1], [2], [3, 7], [1, 5, 10, 25]])
def test_zero_amount(coins):
    assert count_dp(make_coin_set(coins), 0) == 1


def test_unreachable_amount():
    assert count_dp(make_coin_set([2]), 3) == 0


def test_negative_amount():
    with pytest.raises(NegativeAmount):
        count_dp(make_coin_set([1]), -1)
    with pytest.raises(NegativeAmount):
        count_table(make_coin_set([1]), -1)


def test_table():
    assert count_table(make_coin_set([1, 5]), 10).values == (1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3)
    assert count_table(make_coin_set([3]), 0).values == (1,)
    assert count_table(make_coin_set([1, 5, 10, 25]), 100)[100] == 242


def test_bounded_examples():
    assert count_bounded(make_coin_set([1, 5]), [4, 1], 9) == 1
    assert count_bounded(make_coin_set([2, 3]), [1, 1], 5) == 1
    assert count_bounded(make_coin_set([2, 3]), [0, 0], 0) == 1
    with pytest.raises(InvalidParams):
        count_bounded(make_coin_set([2, 3]), [1], 5)
    with pytest.raises(InvalidParams):
        count_bounded(make_coin_set([2, 3]), [1, -1], 5)


coin_sets = st.sets(st.integers(1, 15), min_size=1, max_size=4).map(sorted)


@given(coin_sets, st.integers(0, 40), st.randoms(use_true_random=False))
def test_sweep_order_irrelevant(coins, N, rnd):
    S = make_coin_set(coins)
    order = list(coins)
    rnd.shuffle(order)
    assert count_table(S, N, order=order).values == count_table(S, N).values


@given(st.sets(st.integers(2, 20), max_size=3).map(lambda s: sorted(s | {1})), st.integers(0, 200))
def test_monotone_with_penny(coins, N):
    values = count_table(make_coin_set(coins), N).values
    assert all(v >= 1 for v in values)
    assert all(a <= b for a, b in zip(values, values[1:]))


def test_pennies_only():
    assert set(count_table(make_coin_set([1]), 500).values) == {1}


@given(coin_sets, st.integers(0, 60))
def test_generous_caps_match_unbounded(coins, n):
    S = make_coin_set(coins)
    caps = [n // c for c in coins]
    assert count_bounded(S, caps, n) == count_dp(S, n)


@settings(max_examples=60)
@given(coin_sets, st.data())
def test_bounded_matches_enumeration(coins, data):
    caps = [data.draw(st.integers(0, 4)) for _ in coins]
    S = make_coin_set(coins)
    table = bounded_table(S, caps, 30).values
    assert all(table[n] <= u for n, u in zip(range(31), count_table(S, 30).values))
    for n in range(31):
        assert table[n] == enumerate_ways(coins, n, caps)


def test_small_sets_against_enumeration():
    for size in (1, 2, 3):
        for coins in itertools.combinations(range(1, 9), size):
            table = count_table(make_coin_set(coins), 30).values
            assert list(table) == [enumerate_ways(coins, n) for n in range(31)], coins


def test_against_power_series():
    coins = [1, 2, 4, 5]
    assert list(count_table(make_coin_set(coins), 60).values) == series_coefficients(coins, 60)

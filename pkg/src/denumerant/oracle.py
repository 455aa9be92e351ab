"""Dynamic-programming ground truth for the change function.

Every faster engine in the package is checked against these tables. They are
deliberately the obvious O(v*N) coin-by-coin sweeps and nothing cleverer.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import CoinSet, Count, InvalidParams, check_amount


@dataclass(frozen=True)
class CountTable:
    coins: CoinSet
    upto: int
    values: tuple[Count, ...]

    def __getitem__(self, n: int) -> Count:
        return self.values[n]


@dataclass(frozen=True)
class BoundedCountTable:
    coins: CoinSet
    caps: tuple[int, ...]
    upto: int
    values: tuple[Count, ...]

    def __getitem__(self, n: int) -> Count:
        return self.values[n]


def _sweep(values: list[int], coin: int) -> None:
    # values[n] += values[n - coin]; one layer of the a -> b -> c -> d recurrences
    for n in range(coin, len(values)):
        values[n] += values[n - coin]


def _bounded_sweep(values: list[int], coin: int, cap: int) -> list[int]:
    # new[n] = sum_{q=0}^{cap} old[n - q*coin], via a sliding window along each residue
    out = values[:]
    span = (cap + 1) * coin
    for n in range(coin, len(values)):
        out[n] += out[n - coin]
        if n >= span:
            out[n] -= values[n - span]
    return out


def count_table(S: CoinSet, N: int, order: Sequence[int] | None = None) -> CountTable:
    """Counts for every amount ``0..N`` in one pass.

    ``order`` may give the coins of ``S`` in a different sweep order; the result
    does not depend on it, which the tests exploit.
    """
    check_amount(N)
    coins = S.coins if order is None else tuple(order)
    if sorted(coins) != list(S.coins):
        raise InvalidParams(f"order {coins} is not a permutation of {S.coins}")
    values = [0] * (N + 1)
    values[0] = 1
    for c in coins:
        _sweep(values, c)
    return CountTable(S, N, tuple(values))


def count_dp(S: CoinSet, n: int) -> Count:
    """Number of multisets of coins from ``S`` summing to ``n``."""
    return count_table(S, check_amount(n)).values[n]


def _check_caps(S: CoinSet, caps: Sequence[int]) -> tuple[int, ...]:
    caps = tuple(caps)
    if len(caps) != S.v:
        raise InvalidParams(f"need one cap per coin, got {len(caps)} caps for {S.v} coins")
    if any(c < 0 for c in caps):
        raise InvalidParams(f"caps must be >= 0: {caps}")
    return caps


def bounded_table(S: CoinSet, caps: Sequence[int], N: int) -> BoundedCountTable:
    """Counts for ``0..N`` when coin ``t_i`` may be used at most ``caps[i]`` times."""
    check_amount(N)
    caps = _check_caps(S, caps)
    values = [0] * (N + 1)
    values[0] = 1
    for c, m in zip(S.coins, caps):
        values = _bounded_sweep(values, c, m)
    return BoundedCountTable(S, caps, N, tuple(values))


def count_bounded(S: CoinSet, caps: Sequence[int], n: int) -> Count:
    return bounded_table(S, caps, check_amount(n)).values[n]

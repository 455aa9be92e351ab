"""Coin sets, structured-shape parameters, and the exceptions shared by every engine.

Counts are plain Python ``int`` (unbounded, exact). Rational intermediates use
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Count = int
Rational = Fraction


class ChangeError(ValueError):
    """Base class for invalid inputs to the counting engines."""


class EmptySet(ChangeError):
    pass


class NonPositiveCoin(ChangeError):
    pass


class DuplicateCoin(ChangeError):
    pass


class NegativeAmount(ChangeError):
    pass


class InvalidParams(ChangeError):
    pass


class BadLayer(ChangeError):
    pass


class NonDivisor(ChangeError):
    pass


class SchemeTooLarge(ChangeError):
    pass


class NonIntegralResult(ArithmeticError):
    """A closed form produced a non-integer or negative value.

    This never happens for correct formulas; seeing it means a transcription bug.
    """


@dataclass(frozen=True)
class CoinSet:
    """Strictly increasing tuple of positive denominations."""

    coins: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coins:
            raise EmptySet("a coin set needs at least one coin")
        if any(c < 1 for c in self.coins):
            raise NonPositiveCoin(f"coins must be >= 1: {self.coins}")
        if any(a >= b for a, b in zip(self.coins, self.coins[1:])):
            raise ValueError(f"coins must be strictly increasing: {self.coins}")

    @property
    def v(self) -> int:
        return len(self.coins)

    def __iter__(self):
        return iter(self.coins)

    def __len__(self) -> int:
        return len(self.coins)

    def prefix(self, i: int) -> CoinSet:
        return CoinSet(self.coins[:i])

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.coins)) + "}"


def make_coin_set(raw: Iterable[int]) -> CoinSet:
    """Validate ``raw`` and return it as a sorted :class:`CoinSet`.

    >>> make_coin_set([25, 1, 10, 5])
    CoinSet(coins=(1, 5, 10, 25))
    """
    values = list(raw)
    if not values:
        raise EmptySet("no coins given")
    for c in values:
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"coin denominations must be integers, got {c!r}")
        if c < 1:
            raise NonPositiveCoin(f"coin {c} is not positive")
    if len(set(values)) != len(values):
        dupes = sorted({c for c in values if values.count(c) > 1})
        raise DuplicateCoin(f"repeated coin(s): {dupes}")
    return CoinSet(tuple(sorted(values)))


def check_amount(n: int) -> int:
    if n < 0:
        raise NegativeAmount(f"amount must be >= 0, got {n}")
    return n


def exact_count(value: Fraction, what: str = "closed form") -> Count:
    """Convert a rational result to a Count, insisting it is a nonnegative integer."""
    if value.denominator != 1 or value < 0:
        raise NonIntegralResult(f"{what} evaluated to {value}, expected a nonnegative integer")
    return value.numerator


@dataclass(frozen=True)
class ThreeCoinParams:
    """The coin set ``{1, s, k*s}``."""

    s: int
    k: int

    def __post_init__(self) -> None:
        if self.s < 2 or self.k < 2:
            raise InvalidParams(f"need s, k >= 2, got s={self.s}, k={self.k}")

    def coin_set(self) -> CoinSet:
        return CoinSet((1, self.s, self.k * self.s))


@dataclass(frozen=True)
class FourCoinParams:
    """The coin set ``{1, s, k*s, r*s}`` with ``2 <= k < r``."""

    s: int
    k: int
    r: int

    def __post_init__(self) -> None:
        if self.s < 2 or self.k < 2 or self.r < 2:
            raise InvalidParams(f"need s, k, r >= 2, got {self}")
        if self.r <= self.k:
            raise InvalidParams(f"need r > k, got k={self.k}, r={self.r}")

    def coin_set(self) -> CoinSet:
        return CoinSet((1, self.s, self.k * self.s, self.r * self.s))


@dataclass(frozen=True)
class Pennies:
    pass


@dataclass(frozen=True)
class TwoCoin:
    s: int


@dataclass(frozen=True)
class ThreeCoin:
    s: int
    k: int

    @property
    def params(self) -> ThreeCoinParams:
        return ThreeCoinParams(self.s, self.k)


@dataclass(frozen=True)
class FourCoin:
    s: int
    k: int
    r: int

    @property
    def params(self) -> FourCoinParams:
        return FourCoinParams(self.s, self.k, self.r)


@dataclass(frozen=True)
class General:
    pass


Shape = Union[Pennies, TwoCoin, ThreeCoin, FourCoin, General]


def classify_coin_set(S: CoinSet) -> Shape:
    """Return the most specific structured shape ``S`` matches.

    For the structured shapes the multipliers are forced: ``k = t_3 / t_2`` and
    ``r = t_4 / t_2``, so there is never more than one reading.
    """
    c = S.coins
    if c[0] != 1:
        return General()
    if len(c) == 1:
        return Pennies()
    s = c[1]
    if any(x % s for x in c[2:]):
        return General()
    if len(c) == 2:
        return TwoCoin(s)
    if len(c) == 3:
        return ThreeCoin(s, c[2] // s)
    if len(c) == 4:
        return FourCoin(s, c[2] // s, c[3] // s)
    return General()


def shape_coins(shape: Shape) -> tuple[int, ...] | None:
    """Rebuild the coin tuple a structured shape denotes; ``None`` for General."""
    if isinstance(shape, Pennies):
        return (1,)
    if isinstance(shape, TwoCoin):
        return (1, shape.s)
    if isinstance(shape, ThreeCoin):
        return (1, shape.s, shape.k * shape.s)
    if isinstance(shape, FourCoin):
        return (1, shape.s, shape.k * shape.s, shape.r * shape.s)
    return None

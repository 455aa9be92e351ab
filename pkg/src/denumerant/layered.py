"""Named recurrence layers a_n, b_n, c_n, d_n and the dollar hand computation."""
from __future__ import annotations

from dataclasses import dataclass

from .core import BadLayer, CoinSet, Count, InvalidParams, check_amount, make_coin_set
from .oracle import count_table


def b_closed(s: int, n: int) -> Count:
    """Ways to make ``n`` from pennies and ``s``-cent coins: ``n // s + 1``."""
    if s < 2:
        raise InvalidParams(f"need s >= 2, got {s}")
    return check_amount(n) // s + 1


def _check_layer(S: CoinSet, layer_index: int) -> None:
    if not 1 <= layer_index <= S.v:
        raise BadLayer(f"layer {layer_index} outside 1..{S.v}")


def layer_value(S: CoinSet, layer_index: int, n: int) -> Count:
    """Ways to make ``n`` using only the first ``layer_index`` coins of ``S``."""
    _check_layer(S, layer_index)
    return count_table(S.prefix(layer_index), check_amount(n)).values[n]


def layer_table(S: CoinSet, layer_index: int, N: int) -> tuple[Count, ...]:
    _check_layer(S, layer_index)
    return count_table(S.prefix(layer_index), check_amount(N)).values


@dataclass(frozen=True)
class LedgerEntry:
    """One line of the hand computation: ``name = sum of terms = total``."""

    name: str
    terms: tuple[tuple[str, int], ...]
    total: int

    def symbolic(self) -> str:
        return f"{self.name} = " + " + ".join(label for label, _ in self.terms)

    def numeric(self) -> str:
        values = " + ".join(str(v) for _, v in self.terms)
        if len(self.terms) == 1:
            return f"{self.name} = {values}"
        return f"{self.name} = {values} = {self.total}"

    @property
    def consistent(self) -> bool:
        return sum(v for _, v in self.terms) == self.total


@dataclass(frozen=True)
class Walkthrough:
    entries: tuple[LedgerEntry, ...]

    def value(self, name: str) -> int:
        for e in self.entries:
            if e.name == name:
                return e.total
        raise KeyError(name)

    def lines(self) -> list[str]:
        out = []
        for e in self.entries:
            if len(e.terms) > 1 or e.terms[0][0] != str(e.total):
                out.append(e.symbolic())
            out.append(e.numeric())
        return out


def dollar_walkthrough() -> Walkthrough:
    """Rebuild the by-hand count of change for a dollar with {1,5,10,25}.

    c values are expanded with ``c_m = b_m + c_{m-10}`` until the remainder is
    an already-computed c value at or above 10 (below 10, ``c_m = b_m``). Every
    entry is checked against the DP tables before the ledger is returned.
    """
    S = make_coin_set([1, 5, 10, 25])
    _, s, t, u = S.coins
    target = 100
    c_table = layer_table(S, 3, target)
    d_table = layer_table(S, 4, target)

    known: dict[int, int] = {}
    entries = []
    c_args = list(range(0, target + 1, u))
    for m in c_args:
        terms = []
        rest = m
        while rest >= 0:
            if rest != m and rest >= t and rest in known:
                terms.append((f"c_{rest}", known[rest]))
                break
            terms.append((f"b_{rest}", b_closed(s, rest)))
            rest -= t
        total = sum(v for _, v in terms)
        if m == 0:
            terms = [("1", total)]
        known[m] = total
        entries.append(LedgerEntry(f"c_{m}", tuple(terms), total))

    d_terms = tuple((f"c_{m}", known[m]) for m in c_args)
    entries.append(LedgerEntry(f"d_{target}", d_terms, sum(v for _, v in d_terms)))

    for e in entries:
        if not e.consistent:
            raise AssertionError(f"ledger line does not re-sum: {e}")
        arg = int(e.name.split("_")[1])
        table = c_table if e.name.startswith("c_") else d_table
        if table[arg] != e.total:
            raise AssertionError(f"{e.name} = {e.total} disagrees with DP value {table[arg]}")
    return Walkthrough(tuple(entries))

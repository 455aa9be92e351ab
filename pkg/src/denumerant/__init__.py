"""Exact counting of the ways to make change for a coin set."""
from .core import (
    ChangeError,
    CoinSet,
    FourCoinParams,
    ThreeCoinParams,
    classify_coin_set,
    make_coin_set,
)
from .oracle import count_bounded, count_dp, count_table
from .layered import b_closed, dollar_walkthrough, layer_value
from .closedform import c_closed, d_closed, d_closed_k2, us_coins_count
from .quasipoly import build_scheme, eval_scheme, formula_eval, scheme_to_formula

__all__ = [
    "ChangeError",
    "CoinSet",
    "FourCoinParams",
    "ThreeCoinParams",
    "b_closed",
    "build_scheme",
    "c_closed",
    "classify_coin_set",
    "count_bounded",
    "count_dp",
    "count_table",
    "d_closed",
    "d_closed_k2",
    "dollar_walkthrough",
    "eval_scheme",
    "formula_eval",
    "layer_value",
    "make_coin_set",
    "scheme_to_formula",
    "us_coins_count",
]

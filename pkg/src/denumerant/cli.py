"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Callable, Sequence

from . import closedform, layered, oracle, quasipoly
from .core import (
    ChangeError,
    CoinSet,
    FourCoin,
    Pennies,
    ThreeCoin,
    TwoCoin,
    classify_coin_set,
    make_coin_set,
)

METHODS = ("auto", "dp", "layered", "closed3", "closed4", "quasipoly")


class UsageError(Exception):
    pass


def parse_coins(text: str) -> CoinSet:
    try:
        raw = [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"--coins must be comma-separated integers, got {text!r}") from None
    try:
        return make_coin_set(raw)
    except (ChangeError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def _amount(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"amount must be >= 0, got {n}")
    return n


def _amount_list(text: str) -> list[int]:
    return [_amount(part) for part in text.split(",")]


def pick_method(S: CoinSet) -> str:
    shape = classify_coin_set(S)
    if isinstance(shape, FourCoin):
        return "closed4"
    if isinstance(shape, ThreeCoin):
        return "closed3"
    try:
        quasipoly.build_scheme(S)
    except quasipoly.SchemeTooLarge:
        return "dp"
    return "quasipoly"


def count_with(S: CoinSet, n: int, method: str) -> int:
    if method == "auto":
        method = pick_method(S)
    shape = classify_coin_set(S)
    if method == "dp":
        return oracle.count_dp(S, n)
    if method == "layered":
        return layered.layer_value(S, S.v, n)
    if method == "closed3":
        if not isinstance(shape, ThreeCoin):
            raise UsageError(f"closed3 needs coins {{1, s, ks}}, got {S}")
        return closedform.c_closed(shape.params, n)
    if method == "closed4":
        if not isinstance(shape, FourCoin):
            raise UsageError(f"closed4 needs coins {{1, s, ks, rs}} with k < r, got {S}")
        return closedform.d_closed(shape.params, n)
    if method == "quasipoly":
        return quasipoly.eval_scheme(quasipoly.build_scheme(S), n)
    raise UsageError(f"unknown method {method!r}")


def cmd_count(args: argparse.Namespace) -> int:
    S = parse_coins(args.coins)
    print(count_with(S, args.n, args.method))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    S = parse_coins(args.coins)
    if args.start > args.stop:
        raise UsageError(f"--from {args.start} is greater than --to {args.stop}")
    values = oracle.count_table(S, args.stop).values[args.start:]
    rows = list(zip(range(args.start, args.stop + 1), values))
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "count"])
        writer.writerows(rows)
    else:
        print(json.dumps([{"n": n, "count": c} for n, c in rows]))
    return 0


def cmd_formula(args: argparse.Namespace) -> int:
    S = parse_coins(args.coins)
    formula = quasipoly.scheme_to_formula(quasipoly.build_scheme(S))
    print(formula.to_json() if args.format == "json" else formula.to_latex())
    return 0


Engine = Callable[[int], int]


def engines_for(S: CoinSet, max_n: int) -> dict[str, Engine]:
    """Every engine that applies to ``S``, keyed by name.

    Table-backed engines are materialised once up to ``max_n``.
    """
    engines: dict[str, Engine] = {}
    layer = layered.layer_table(S, S.v, max_n)
    engines["layered"] = layer.__getitem__
    shape = classify_coin_set(S)
    if isinstance(shape, Pennies):
        engines["pennies"] = lambda n: 1
    if isinstance(shape, TwoCoin):
        engines["b_closed"] = lambda n, s=shape.s: layered.b_closed(s, n)
    if isinstance(shape, ThreeCoin):
        engines["closed3"] = lambda n, p=shape.params: closedform.c_closed(p, n)
    if isinstance(shape, FourCoin):
        p = shape.params
        engines["closed4"] = lambda n: closedform.d_closed(p, n)
        if p.k == 2:
            engines["closed4_k2"] = lambda n: closedform.d_closed_k2(p, n)
        if S.coins == (1, 5, 10, 25):
            engines["us_coins"] = closedform.us_coins_count
    try:
        scheme = quasipoly.build_scheme(S)
    except quasipoly.SchemeTooLarge:
        pass
    else:
        engines["quasipoly"] = lambda n: quasipoly.eval_scheme(scheme, n)
        formula = quasipoly.scheme_to_formula(scheme)
        engines["formula"] = lambda n: quasipoly.formula_eval(formula, n)
    return engines


def cmd_verify(args: argparse.Namespace) -> int:
    S = parse_coins(args.coins)
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    truth = oracle.count_table(S, args.max_n).values
    engines = engines_for(S, args.max_n)
    for name, engine in engines.items():
        for n in range(args.max_n + 1):
            got = engine(n)
            if got != truth[n]:
                print(f"MISMATCH: engine {name} at n={n}: got {got}, dp says {truth[n]}")
                return 1
    names = ", ".join(["dp", *engines])
    print(f"OK: {len(engines) + 1} engines agree on {args.max_n + 1} points ({names})")
    return 0


def cmd_walkthrough(args: argparse.Namespace) -> int:
    for line in layered.dollar_walkthrough().lines():
        print(line)
    return 0


def _best_time(fn: Callable[[], object], repetitions: int) -> float:
    best = float("inf")
    for _ in range(repetitions):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def cmd_bench(args: argparse.Namespace) -> int:
    S = parse_coins(args.coins)
    if args.repetitions < 1:
        raise UsageError("--repetitions must be >= 1")
    start = time.perf_counter()
    scheme = quasipoly.build_scheme(S)
    build = time.perf_counter() - start
    print(f"coins {S}  v={S.v}  lcm={scheme.t}  M={scheme.M}")
    print(f"build_scheme: {build * 1e3:.3f} ms")
    print("n,count,scheme_us,scheme_mults,mult_budget,dp_us,dp_additions")
    for n in args.n:
        stats = quasipoly.eval_scheme_instrumented(scheme, n)
        q_time = _best_time(lambda: quasipoly.eval_scheme(scheme, n), args.repetitions)
        if n <= args.dp_limit:
            dp_value = oracle.count_dp(S, n)
            if dp_value != stats.value:
                print(f"MISMATCH at n={n}: scheme {stats.value}, dp {dp_value}", file=sys.stderr)
                return 1
            dp_time = f"{_best_time(lambda: oracle.count_dp(S, n), 1) * 1e6:.1f}"
            dp_adds = str(sum(max(0, n - c + 1) for c in S.coins))
        else:
            dp_time = dp_adds = "skipped"
        print(f"{n},{stats.value},{q_time * 1e6:.1f},{stats.multiplications},{3 * S.v},{dp_time},{dp_adds}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="denumerant", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count the ways to make change for n")
    p.add_argument("--coins", required=True)
    p.add_argument("--n", required=True, type=_amount)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="tabulate counts over a range of amounts")
    p.add_argument("--coins", required=True)
    p.add_argument("--from", dest="start", type=_amount, default=0)
    p.add_argument("--to", dest="stop", type=_amount, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("formula", help="export the per-residue quasi-polynomial")
    p.add_argument("--coins", required=True)
    p.add_argument("--format", choices=("json", "latex"), default="json")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", help="check every applicable engine against the DP oracle")
    p.add_argument("--coins", required=True)
    p.add_argument("--max-n", required=True, type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("walkthrough", help="print the change-for-a-dollar ledger")
    p.set_defaults(func=cmd_walkthrough)

    p = sub.add_parser("bench", help="time scheme evaluation against the DP oracle")
    p.add_argument("--coins", required=True)
    p.add_argument("--n", required=True, type=_amount_list, help="comma-separated amounts")
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--dp-limit", type=int, default=10 ** 6,
                   help="skip the DP comparison above this amount")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ChangeError, ValueError) as exc:
        print(f"denumerant {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

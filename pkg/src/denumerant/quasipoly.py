"""Generating-function scheme for an arbitrary coin set.

With ``t = lcm(S)`` every factor ``1/(1 - z^{t_i})`` is rewritten as
``f_i(z) / (1 - z^t)`` where ``f_i(z) = 1 + z^{t_i} + ... + z^{t - t_i}``. So

    C(z) = A(z) / (1 - z^t)^v,     A(z) = f_1(z) ... f_v(z),

and the coefficient of ``z^n`` is

    sum over j = n (mod t), 0 <= j <= M, of  a_j * binom((n - j)/t + v - 1, v - 1)

with ``M = deg A = sum(t - t_i)``. Building ``A`` is the expensive, once-per-set
step; each query afterwards costs at most ``3v`` big-integer multiplications.
"""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import (
    CoinSet,
    Count,
    NonDivisor,
    NonIntegralResult,
    SchemeTooLarge,
    check_amount,
    make_coin_set,
)

DEFAULT_BUDGET = 10 ** 7
BUDGET_ENV = "CHANGE_SCHEME_BUDGET"

# below this many terms in the shorter factor, schoolbook beats packing into a big int
_KRONECKER_CUTOFF = 32


def scheme_budget() -> int:
    """Coefficient-slot budget for :func:`build_scheme`, honouring ``CHANGE_SCHEME_BUDGET``."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be a decimal integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, ascending degree, no trailing zeros."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(self.coefficients)
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coefficients", c[:end])

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coefficients) - 1

    def __getitem__(self, j: int) -> int:
        if 0 <= j < len(self.coefficients):
            return self.coefficients[j]
        return 0

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return poly_mul(self, other)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self[j] + other[j] for j in range(n)))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self[j] - other[j] for j in range(n)))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def _schoolbook(p: Sequence[int], q: Sequence[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = [0] * (len(p) + len(q) - 1)
    for i, qi in enumerate(q):
        if qi:
            for j, pj in enumerate(p):
                out[i + j] += qi * pj
    return out


def _kronecker(p: Sequence[int], q: Sequence[int]) -> list[int]:
    # Nonnegative coefficients only: pack into one big int per polynomial,
    # multiply, and read the product's coefficients back out of fixed-width slots.
    bound = max(p) * max(q) * min(len(p), len(q))
    width = bound.bit_length() + 1
    to_bytes = (width + 7) // 8
    width = to_bytes * 8

    def pack(coeffs: Sequence[int]) -> int:
        return int.from_bytes(b"".join(c.to_bytes(to_bytes, "little") for c in coeffs), "little")

    prod = pack(p) * pack(q)
    n = len(p) + len(q) - 1
    raw = prod.to_bytes(n * to_bytes, "little")
    return [int.from_bytes(raw[i * to_bytes:(i + 1) * to_bytes], "little") for i in range(n)]


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Exact product of two integer polynomials."""
    a, b = p.coefficients, q.coefficients
    if not a or not b:
        return IntPolynomial(())
    if min(len(a), len(b)) < _KRONECKER_CUTOFF or min(a) < 0 or min(b) < 0:
        return IntPolynomial(tuple(_schoolbook(a, b)))
    return IntPolynomial(tuple(_kronecker(a, b)))


def lcm_of(S: CoinSet) -> int:
    return math.lcm(*S.coins)


def factor_poly(t: int, t_i: int) -> IntPolynomial:
    """The quotient ``(1 - z^t) / (1 - z^{t_i})``: ones at exponents ``0, t_i, ..., t - t_i``."""
    if t_i < 1 or t % t_i:
        raise NonDivisor(f"{t_i} does not divide {t}")
    coeffs = [0] * (t - t_i + 1)
    coeffs[::t_i] = [1] * (t // t_i)
    return IntPolynomial(tuple(coeffs))


def binomial(top: int, k: int) -> Count:
    """``C(top, k)``; zero when ``top < k``."""
    if k < 0 or top < k:
        return 0
    return math.comb(top, k)


@dataclass(frozen=True)
class EvalStats:
    value: Count
    multiplications: int
    terms: int


@dataclass(frozen=True)
class DenumerantScheme:
    """Precomputed data ``(t, v, a_0..a_M)`` for one coin set."""

    coins: CoinSet
    t: int
    v: int
    a: tuple[Count, ...]
    _denominator: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_denominator", math.factorial(self.v - 1))
        expected_M = sum(self.t - c for c in self.coins)
        if len(self.a) != expected_M + 1:
            raise AssertionError(f"A(z) has degree {len(self.a) - 1}, expected {expected_M}")
        if self.a[0] != 1:
            raise AssertionError("a_0 must be 1")
        if self.a != self.a[::-1]:
            raise AssertionError("A(z) must be palindromic")
        if sum(self.a) != math.prod(self.t // c for c in self.coins):
            raise AssertionError("A(1) must equal the product of t / t_i")

    @property
    def M(self) -> int:
        return len(self.a) - 1


def build_scheme(S: CoinSet, budget: int | None = None) -> DenumerantScheme:
    """Multiply out ``A(z)`` for ``S``.

    Raises :class:`SchemeTooLarge` when ``M + 1`` coefficient slots would exceed
    ``budget`` (default :func:`scheme_budget`).
    """
    if budget is None:
        budget = scheme_budget()
    t = lcm_of(S)
    M = sum(t - c for c in S.coins)
    if M + 1 > budget:
        raise SchemeTooLarge(
            f"A(z) for {S} needs {M + 1} coefficients (lcm {t}), budget is {budget}"
        )
    A = IntPolynomial((1,))
    # multiply the short factors first so intermediate products stay small
    for c in sorted(S.coins, reverse=True):
        A = A * factor_poly(t, c)
    return DenumerantScheme(S, t, S.v, A.coefficients)


def eval_scheme_instrumented(scheme: DenumerantScheme, n: int) -> EvalStats:
    """Evaluate the scheme at ``n`` and report how many big-int multiplications it took.

    Only admissible ``j`` (``j = n mod t``, ``j <= min(n, M)``) are visited. The
    binomial for the largest such ``j`` costs ``v - 2`` multiplications; moving
    to the next ``j`` down costs one more, and each ``a_j`` weight one more.
    Divisions are exact and not counted.
    """
    n = check_amount(n)
    t, v, a = scheme.t, scheme.v, scheme.a
    top_j = min(n, scheme.M)
    top_j -= (top_j - n) % t
    if top_j < 0:
        return EvalStats(0, 0, 0)

    mults = 0
    total = 0
    terms = 0
    q = (n - top_j) // t
    if v == 1:
        binom = 1
    else:
        num = q + 1
        for i in range(2, v):
            num *= q + i
            mults += 1
        binom = num // scheme._denominator
    j = top_j
    while True:
        if a[j]:
            total += a[j] * binom
            mults += 1
        terms += 1
        j -= t
        if j < 0:
            break
        q += 1
        if v > 1:
            # C(q + v - 1, v - 1) = C(q + v - 2, v - 1) * (q + v - 1) / q
            binom = binom * (q + v - 1) // q
            mults += 1
    return EvalStats(total, mults, terms)


def eval_scheme(scheme: DenumerantScheme, n: int) -> Count:
    return eval_scheme_instrumented(scheme, n).value


@dataclass(frozen=True)
class QuasiPolynomialFormula:
    """One polynomial in ``n`` per residue class mod ``period``.

    ``residues[rho]`` lists rational coefficients in ascending degree; an empty
    tuple is the zero polynomial (amounts in that class cannot be made at all).
    """

    coins: CoinSet
    period: int
    residues: tuple[tuple[Fraction, ...], ...]

    def polynomial(self, rho: int) -> tuple[Fraction, ...]:
        return self.residues[rho % self.period]

    def to_json(self) -> str:
        return json.dumps(formula_to_dict(self))

    def to_latex(self) -> str:
        return formula_to_latex(self)


def _poly_times_linear(poly: list[Fraction], c0: Fraction, c1: Fraction) -> list[Fraction]:
    out = [Fraction(0)] * (len(poly) + 1)
    for i, coeff in enumerate(poly):
        out[i] += coeff * c0
        out[i + 1] += coeff * c1
    return out


def _trim(poly: list[Fraction]) -> tuple[Fraction, ...]:
    end = len(poly)
    while end and poly[end - 1] == 0:
        end -= 1
    return tuple(poly[:end])


def scheme_to_formula(scheme: DenumerantScheme) -> QuasiPolynomialFormula:
    """Expand each residue's sum of binomials into an explicit polynomial in ``n``.

    ``binom((n - j)/t + v - 1, v - 1)`` is the polynomial
    ``prod_{i=1}^{v-1} ((n - j)/t + i) / (v-1)!``. It vanishes at the negative
    integers ``-(v-1)..-1``, which is exactly where ``j > n`` lands since ``M < v*t``,
    so the expansion is valid for every ``n >= 0``.
    """
    t, v = scheme.t, scheme.v
    inv_t = Fraction(1, t)
    fact = scheme._denominator
    residues = []
    for rho in range(t):
        acc = [Fraction(0)] * v
        for j in range(rho, scheme.M + 1, t):
            if not scheme.a[j]:
                continue
            poly = [Fraction(1)]
            shift = Fraction(-j, t)
            for i in range(1, v):
                poly = _poly_times_linear(poly, shift + i, inv_t)
            weight = Fraction(scheme.a[j], fact)
            for d, coeff in enumerate(poly):
                acc[d] += weight * coeff
        residues.append(_trim(acc))
    return QuasiPolynomialFormula(scheme.coins, t, tuple(residues))


def formula_eval(formula: QuasiPolynomialFormula, n: int) -> Count:
    n = check_amount(n)
    acc = Fraction(0)
    for c in reversed(formula.polynomial(n)):
        acc = acc * n + c
    if acc.denominator != 1 or acc < 0:
        raise NonIntegralResult(f"formula for {formula.coins} gave {acc} at n={n}")
    return acc.numerator


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def formula_to_dict(formula: QuasiPolynomialFormula) -> dict:
    return {
        "coins": list(formula.coins.coins),
        "period": formula.period,
        "residues": [
            {"residue": rho, "coefficients": [_fraction_str(c) for c in poly]}
            for rho, poly in enumerate(formula.residues)
        ],
    }


def formula_from_dict(data: dict) -> QuasiPolynomialFormula:
    """Inverse of :func:`formula_to_dict`; validates the residue listing."""
    coins = make_coin_set(data["coins"])
    period = int(data["period"])
    entries = sorted(data["residues"], key=lambda e: e["residue"])
    if [e["residue"] for e in entries] != list(range(period)):
        raise ValueError(f"expected residues 0..{period - 1}")
    residues = tuple(_trim([Fraction(c) for c in e["coefficients"]]) for e in entries)
    return QuasiPolynomialFormula(coins, period, residues)


def formula_from_json(text: str) -> QuasiPolynomialFormula:
    return formula_from_dict(json.loads(text))


def _latex_term(coeff: Fraction, degree: int, first: bool) -> str:
    sign = "-" if coeff < 0 else "+"
    mag = abs(coeff)
    if mag.denominator == 1:
        num = "" if (mag == 1 and degree) else str(mag.numerator)
    else:
        num = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
    var = "" if degree == 0 else ("n" if degree == 1 else f"n^{{{degree}}}")
    body = num + var
    if first:
        return body if sign == "+" else "-" + body
    return f" {sign} {body}"


def latex_polynomial(poly: Sequence[Fraction]) -> str:
    if not poly:
        return "0"
    parts = []
    for degree in range(len(poly) - 1, -1, -1):
        if poly[degree]:
            parts.append(_latex_term(poly[degree], degree, not parts))
    return "".join(parts)


def formula_to_latex(formula: QuasiPolynomialFormula) -> str:
    lines = [rf"% change function for S = \{{{', '.join(map(str, formula.coins.coins))}\}}"]
    lines.append(r"f(n) = \begin{cases}")
    rows = [
        rf"  {latex_polynomial(poly)} & n \equiv {rho} \pmod{{{formula.period}}}"
        for rho, poly in enumerate(formula.residues)
    ]
    lines.append(" \\\\\n".join(rows))
    lines.append(r"\end{cases}")
    return "\n".join(lines)

"""Closed forms for the coin sets {1, s, ks} and {1, s, ks, rs}.

Everything is evaluated in exact rational arithmetic and converted back to an
integer at the end with an integrality check, so a mistyped coefficient shows
up as :class:`~denumerant.core.NonIntegralResult` or an oracle mismatch rather
than a silently wrong count.

The periodic correction for four coins, ``delta(k, r, L, M)``, is

    sum_{i=0}^{L} [(k-2) * ((r*i + M) mod k) - ((r*i + M) mod k)**2] / (2k)

For ``k = 2`` with ``r`` odd the correction is *negative*; the DP grid in the
test suite confirms this and rejects the positive-sign variant.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .core import (
    Count,
    FourCoinParams,
    InvalidParams,
    ThreeCoinParams,
    check_amount,
    exact_count,
)


@dataclass(frozen=True)
class CnDecomposition:
    """``n = s*L + L0`` with ``j = L mod k``."""

    L: int
    L0: int
    j: int


@dataclass(frozen=True)
class DnDecomposition:
    """``n = s*(r*L + M) + L0``."""

    L: int
    M: int
    L0: int


def decompose_c(p: ThreeCoinParams, n: int) -> CnDecomposition:
    L, L0 = divmod(check_amount(n), p.s)
    return CnDecomposition(L, L0, L % p.k)


def decompose_d(p: FourCoinParams, n: int) -> DnDecomposition:
    check_amount(n)
    L, rem = divmod(n, p.r * p.s)
    M, L0 = divmod(rem, p.s)
    return DnDecomposition(L, M, L0)


def c_closed(p: ThreeCoinParams, n: int) -> Count:
    """Change count for ``{1, s, ks}``; valid for every ``n >= 0`` including ``n < s``."""
    k = p.k
    d = decompose_c(p, n)
    L, j = d.L, d.j
    value = Fraction(L * L + (k + 2) * L + 2 * k, 2 * k) + Fraction((k - 2) * j - j * j, 2 * k)
    return exact_count(value, f"c_closed(s={p.s}, k={k}, n={n})")


def c_bounds(p: ThreeCoinParams, n: int) -> tuple[Fraction, Fraction]:
    """Quadratic lower and upper bounds on the three-coin count."""
    s, k = p.s, p.k
    n = check_amount(n)
    lead = Fraction(n * n, 2 * k * s * s)
    lower = lead + Fraction(n, 2 * s) - k
    upper = lead + Fraction((k + 2) * n, 2 * k * s) + Fraction((k - 2) ** 2, 8) + 1
    return lower, upper


def power_sum_mod(L: int, M: int, r: int, k: int, a: int) -> Count:
    """``sum_{i=0}^{L} ((r*i + M) mod k)**a`` by folding ``i`` onto its residue mod k.

    Residue class ``j`` holds ``(L - j + k) // k`` of the indices.
    """
    if L < 0 or M < 0 or k < 1 or a < 0:
        raise InvalidParams(f"need L, M, a >= 0 and k >= 1, got L={L}, M={M}, k={k}, a={a}")
    return sum(((r * j + M) % k) ** a * ((L - j + k) // k) for j in range(k))


def delta(k: int, r: int, L: int, M: int) -> Fraction:
    """Periodic correction term of the four-coin formula, via the k-term folded sum."""
    if k < 2 or r < 2 or L < 0 or M < 0:
        raise InvalidParams(f"need k, r >= 2 and L, M >= 0, got k={k}, r={r}, L={L}, M={M}")
    total = 0
    for j in range(k):
        rho = (r * j + M) % k
        total += ((L - j) // k + 1) * ((k - 2) * rho - rho * rho)
    return Fraction(total, 2 * k)


def delta_k2(r_parity: Literal["even", "odd"], L: int, M: int) -> Fraction:
    """Closed form of :func:`delta` at ``k = 2``, split on the parity of ``r``."""
    if L < 0 or M < 0:
        raise InvalidParams(f"need L, M >= 0, got L={L}, M={M}")
    sign_L = (-1) ** L
    sign_M1 = (-1) ** (M + 1)
    if r_parity == "even":
        return -Fraction((1 + sign_M1) * (L + 1), 8)
    if r_parity == "odd":
        return -Fraction(2 * L + (1 + sign_L) * (1 + sign_M1) + (1 - sign_L), 16)
    raise InvalidParams(f"r_parity must be 'even' or 'odd', got {r_parity!r}")


def d_main_term(p: FourCoinParams, L: int, M: int) -> Fraction:
    """Cubic-in-L polynomial part of the four-coin count (everything except delta)."""
    k, r = p.k, p.r
    inner = (
        2 * r * r * L * L
        + (r * r + 6 * M * r + 3 * k * r + 6 * r) * L
        + 6 * M * M
        + (6 * k + 12) * M
        + 12 * k
    )
    return Fraction((L + 1) * inner, 12 * k)


def d_main_term_k2(r: int, L: int, M: int) -> Fraction:
    inner = 2 * r * r * L * L + (r * r + 6 * M * r + 12 * r) * L + 6 * M * M + 24 * M + 24
    return Fraction((L + 1) * inner, 24)


def d_closed(p: FourCoinParams, n: int) -> Count:
    """Change count for ``{1, s, ks, rs}``; valid for every ``n >= 0``."""
    d = decompose_d(p, n)
    value = d_main_term(p, d.L, d.M) + delta(p.k, p.r, d.L, d.M)
    return exact_count(value, f"d_closed({p}, n={n})")


def d_closed_k2(p: FourCoinParams, n: int) -> Count:
    """The ``k = 2`` specialisation of :func:`d_closed`, using :func:`delta_k2`."""
    if p.k != 2:
        raise InvalidParams(f"d_closed_k2 needs k = 2, got k={p.k}")
    d = decompose_d(p, n)
    parity = "even" if p.r % 2 == 0 else "odd"
    value = d_main_term_k2(p.r, d.L, d.M) + delta_k2(parity, d.L, d.M)
    return exact_count(value, f"d_closed_k2({p}, n={n})")


def us_coins_count(n: int) -> Count:
    """Ways to make ``n`` cents from pennies, nickels, dimes and quarters.

    The linear coefficient is ``85 + 30*M``, i.e. ``r**2 + 6*M*r + 12*r`` at ``r = 5``.
    """
    n = check_amount(n)
    L, rem = divmod(n, 25)
    M = rem // 5
    main = Fraction((L + 1) * (50 * L * L + (85 + 30 * M) * L + 6 * M * M + 24 * M + 24), 24)
    sign_L = (-1) ** L
    sign_M1 = (-1) ** (M + 1)
    correction = -Fraction(2 * L + (1 + sign_L) * (1 + sign_M1) + (1 - sign_L), 16)
    return exact_count(main + correction, f"us_coins_count({n})")


def asymptotic_leading(p: FourCoinParams, n: int) -> Fraction:
    """Leading cubic term ``n**3 / (6 k r s**3)`` of the four-coin count."""
    if n < 0:
        raise InvalidParams(f"need n >= 0, got {n}")
    return Fraction(n ** 3, 6 * p.k * p.r * p.s ** 3)

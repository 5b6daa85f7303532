"""Brute-force certification of the Bernoulli/trinomial identities behind zeta(2k).

Each check evaluates the summation side by looping over its index set using
only ``bernoulli_number``, ``binomial`` and ``trinomial``, then compares it
exactly with the closed form.  Empty sums are zero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import List

from .bernoulli import bernoulli_number, check_eq3, check_eq4, check_reflection
from .checks import IdentityCheckResult
from .exact_arith import _trinomial, binomial, factorial

__all__ = [
    "lemma1_check",
    "eq5_check",
    "eq6_check",
    "eq15_check",
    "eq16_check",
    "additivity_check",
    "lemma1_lhs",
    "eq5_lhs",
    "eq6_lhs",
    "run_all",
    "REFLECTION_POINTS",
    "EQ3_RANGE",
    "EQ4_RANGE",
    "REFLECTION_MAX_N",
]

EQ3_RANGE = range(2, 501)
EQ4_RANGE = range(1, 502, 2)
REFLECTION_MAX_N = 60
REFLECTION_POINTS = (Fraction(0), Fraction(1, 2), Fraction(1, 3), Fraction(2, 5), Fraction(-1))


@lru_cache(maxsize=1024)
def _trinomial_diagonal(k: int, m: int) -> tuple:
    # entry t: trinomial(2k+2; 2t, 2i+1, 2k-2t-2i+1) with i = m - t.
    # Cached so the three range-restricted sums share the index triangle.
    n = 2 * k + 2
    return tuple(_trinomial(n, 2 * t, 2 * (m - t) + 1, n - 2 * m - 1) for t in range(m + 1))


def _triangle_sum(k: int, lo: int, hi: int) -> Fraction:
    """sum of B_2t 2^2t trinomial(2k+2; 2t, 2i+1, .) over lo < i + t <= hi."""
    hi = min(hi, k)
    inner = [0] * (hi + 1)
    for m in range(max(lo + 1, 0), hi + 1):
        for t, value in enumerate(_trinomial_diagonal(k, m)):
            inner[t] += value
    total = Fraction(0)
    for t, value in enumerate(inner):
        if value:
            total += bernoulli_number(2 * t) * (int(value) << (2 * t))
    return total


def lemma1_lhs(k: int) -> Fraction:
    return _triangle_sum(k, -1, k // 2)


def eq5_lhs(k: int) -> Fraction:
    return _triangle_sum(k, -1, k)


def eq6_lhs(k: int) -> Fraction:
    return _triangle_sum(k, k // 2, k)


def _require_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")


def lemma1_check(k: int) -> IdentityCheckResult:
    _require_k(k)
    rhs = (k + 1) * (4**k + (-1) ** k * binomial(2 * k, k))
    return IdentityCheckResult.make("lemma1", lemma1_lhs(k), Fraction(rhs), k=k)


def eq5_check(k: int) -> IdentityCheckResult:
    _require_k(k)
    return IdentityCheckResult.make("eq5", eq5_lhs(k), Fraction(2 ** (2 * k + 1) * (k + 1)), k=k)


def eq6_check(k: int) -> IdentityCheckResult:
    _require_k(k)
    rhs = (k + 1) * (4**k - (-1) ** k * binomial(2 * k, k))
    return IdentityCheckResult.make("eq6", eq6_lhs(k), Fraction(rhs), k=k)


def eq15_check(k: int) -> IdentityCheckResult:
    _require_k(k)
    lhs = Fraction(0)
    for j in range(1, k):
        lhs += bernoulli_number(2 * k - 2 * j) / (factorial(2 * j + 2) * factorial(2 * k - 2 * j))
    lhs *= 2 * factorial(2 * k)
    rhs = Fraction(2 * k, (2 * k + 1) * (2 * k + 2)) - bernoulli_number(2 * k)
    return IdentityCheckResult.make("eq15", lhs, rhs, k=k)


def eq16_check(k: int) -> IdentityCheckResult:
    _require_k(k)
    h = (k - 1) // 2
    lhs = Fraction(0)
    for j in range(h + 1, k):
        head = sum(binomial(2 * j + 2, 2 * i + 1) for i in range(j - h))
        lhs += bernoulli_number(2 * k - 2 * j) * Fraction(
            head, 4**j * factorial(2 * j + 2) * factorial(2 * k - 2 * j)
        )
    lhs *= 2 * factorial(2 * k)
    e_k = 1 - k % 2
    bracket = (k + 1) * (4**k + (-1) ** k * binomial(2 * k, k)) - (
        4**k + binomial(2 * k + 1, k) * e_k
    )
    rhs = Fraction(2 * bracket, 4**k * (2 * k + 1) * (2 * k + 2))
    return IdentityCheckResult.make("eq16", lhs, rhs, k=k)


def additivity_check(k: int) -> IdentityCheckResult:
    """The full triangle splits into the Lemma 1 part and its complement."""
    _require_k(k)
    return IdentityCheckResult.make("eq5=lemma1+eq6", eq5_lhs(k), lemma1_lhs(k) + eq6_lhs(k), k=k)


def run_all(k_max: int) -> List[IdentityCheckResult]:
    """Every identity check, in a fixed order; failures are collected, not raised.

    The k-indexed checks run for k = 1..k_max.  The Bernoulli identities run
    over their fixed ranges regardless of ``k_max``.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    results: List[IdentityCheckResult] = []
    results.extend(check_eq3(n) for n in EQ3_RANGE)
    results.extend(check_eq4(n) for n in EQ4_RANGE)
    results.extend(
        check_reflection(n, x) for n in range(REFLECTION_MAX_N + 1) for x in REFLECTION_POINTS
    )
    for k in range(1, k_max + 1):
        results.append(lemma1_check(k))
        results.append(eq5_check(k))
        results.append(eq6_check(k))
        results.append(additivity_check(k))
        results.append(eq15_check(k))
        results.append(eq16_check(k))
    return results

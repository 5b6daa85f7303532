"""Bernoulli numbers and polynomials (convention B_1 = -1/2)."""

from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .checks import IdentityCheckResult
from .exact_arith import RationalLike, binomial

__all__ = [
    "bernoulli_number",
    "bernoulli_table",
    "BernoulliPolynomial",
    "bernoulli_polynomial",
    "bernoulli_poly_eval",
    "check_eq3",
    "check_eq4",
    "check_reflection",
    "perturbed",
]

_lock = threading.Lock()
_table: List[Fraction] = [Fraction(1), Fraction(-1, 2)]
_overrides: Dict[int, Fraction] = {}


def _extend(m: int) -> None:
    # Solve sum_{j=0}^{n-1} B_j C(n, j) = 0 for the top index j = n - 1.
    with _lock:
        while len(_table) <= m:
            top = len(_table)
            if top % 2:
                _table.append(Fraction(0))
                continue
            n = top + 1
            num = Fraction(0)
            for j in range(0, top, 2):
                num += binomial(n, j) * _table[j]
            num += n * _table[1]
            _table.append(-num / n)


def bernoulli_number(m: int) -> Fraction:
    """Exact B_m."""
    if m < 0:
        raise ValueError(f"Bernoulli index must be >= 0, got {m}")
    if _overrides and m in _overrides:
        return _overrides[m]
    if m >= len(_table):
        _extend(m)
    return _table[m]


def bernoulli_table(max_index: int) -> List[Fraction]:
    """[B_0, ..., B_max_index]."""
    if max_index < 0:
        raise ValueError(f"max index must be >= 0, got {max_index}")
    return [bernoulli_number(m) for m in range(max_index + 1)]


@contextmanager
def perturbed(m: int, delta: RationalLike = 1):
    """Temporarily shift B_m by ``delta``; used to prove the checks can fail."""
    shifted = bernoulli_number(m) + Fraction(delta)
    with _lock:
        previous = _overrides.get(m)
        _overrides[m] = shifted
    try:
        yield
    finally:
        with _lock:
            if previous is None:
                del _overrides[m]
            else:
                _overrides[m] = previous


@dataclass(frozen=True)
class BernoulliPolynomial:
    """B_n(x); ``coefficients[l]`` multiplies x^(n-l) and equals B_l C(n, l)."""

    degree: int
    coefficients: Tuple[Fraction, ...]

    def __call__(self, x: RationalLike) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in self.coefficients:
            acc = acc * x + c
        return acc


def bernoulli_polynomial(n: int) -> BernoulliPolynomial:
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    coeffs = tuple(bernoulli_number(ell) * binomial(n, ell) for ell in range(n + 1))
    return BernoulliPolynomial(n, coeffs)


def bernoulli_poly_eval(n: int, x: RationalLike) -> Fraction:
    """B_n(x) = sum_l B_l C(n, l) x^(n-l), by Horner's rule."""
    return bernoulli_polynomial(n)(x)


def check_eq3(n: int) -> IdentityCheckResult:
    """sum_{m=0}^{n-1} B_m C(n, m) == 0."""
    if n < 2:
        raise ValueError(f"eq3 needs n >= 2, got {n}")
    lhs = Fraction(0)
    for m in range(n):
        b = bernoulli_number(m)
        if b:
            lhs += b * binomial(n, m)
    return IdentityCheckResult.make("eq3", lhs, Fraction(0), n=n)


def check_eq4(n: int) -> IdentityCheckResult:
    """sum_{m=0}^{n} B_m 2^m C(n, m) == 0 for odd n."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"eq4 needs odd n >= 1, got {n}")
    lhs = Fraction(0)
    for m in range(n + 1):
        b = bernoulli_number(m)
        if b:
            lhs += b * (binomial(n, m) << m)
    return IdentityCheckResult.make("eq4", lhs, Fraction(0), n=n)


def check_reflection(n: int, x: RationalLike) -> IdentityCheckResult:
    """B_n(x) == (-1)^n B_n(1 - x)."""
    x = Fraction(x)
    poly = bernoulli_polynomial(n)
    lhs = poly(x)
    rhs = poly(1 - x)
    if n % 2:
        rhs = -rhs
    return IdentityCheckResult.make("reflection", lhs, rhs, n=n, x=x)

"""zeta(2k) as a rational multiple of pi^(2k), computed two independent ways.

``zeta_closed_form`` uses Euler's Bernoulli-number formula.  ``zeta_inductive``
never touches Bernoulli numbers: it squares the Fourier closed form of x**k,
applies Parseval, and solves for zeta(2k) using only its own earlier values.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple

from .bernoulli import bernoulli_number
from .exact_arith import BoundedDecimal, PiSeries, binomial, factorial, pi_series_eval
from .fourier import a_zero, fourier_closed_form

__all__ = [
    "ZetaEvenValue",
    "MuValue",
    "RCoeff",
    "parity_flag",
    "zeta_closed_form",
    "mu",
    "mu_piecewise",
    "r_coeff",
    "r_convolution",
    "zeta_inductive",
    "zeta_decimal",
    "zeta_direct_series",
    "DirectSeries",
]


@dataclass(frozen=True)
class ZetaEvenValue:
    """zeta(2k) = q * pi^(2k)."""

    k: int
    q: Fraction

    def as_series(self) -> PiSeries:
        return PiSeries.monomial(self.q, self.k)

    def __str__(self) -> str:
        return f"zeta({2 * self.k}) = {self.as_series()}"


@dataclass(frozen=True)
class MuValue:
    k: int
    j: int
    value: int


@dataclass(frozen=True)
class RCoeff:
    k: int
    j: int
    value: Fraction


def parity_flag(k: int) -> int:
    """e_k: 1 for even k, 0 for odd k."""
    return 1 - k % 2


def zeta_closed_form(k: int) -> ZetaEvenValue:
    """q = (-1)^(k+1) B_2k 2^(2k) / (2 (2k)!)."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    q = bernoulli_number(2 * k) * Fraction(2 ** (2 * k - 1), factorial(2 * k))
    if k % 2 == 0:
        q = -q
    return ZetaEvenValue(k, q)


def _check_j(k: int, j: int, upper: int) -> None:
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if not 0 <= j <= upper:
        raise ValueError(f"j={j} outside 0..{upper} for k={k}")


def mu(k: int, j: int) -> MuValue:
    """Clipped sum of C(2j+2, 2i+1) over max(0, j-h) <= i <= min(h, j), h = (k-1)//2."""
    _check_j(k, j, k - 1)
    h = (k - 1) // 2
    total = sum(binomial(2 * j + 2, 2 * i + 1) for i in range(max(0, j - h), min(h, j) + 1))
    return MuValue(k, j, total)


def mu_piecewise(k: int, j: int) -> int:
    """mu via its two closed forms: 2^(2j+1), minus twice the clipped-off head when j > h."""
    _check_j(k, j, k - 1)
    h = (k - 1) // 2
    full = 2 ** (2 * j + 1)
    if j <= h:
        return full
    return full - 2 * sum(binomial(2 * j + 2, 2 * i + 1) for i in range(j - h))


def r_coeff(k: int, j: int) -> RCoeff:
    """Coefficient of pi^(2j) zeta(2k-2j) after squaring the Fourier closed form."""
    _check_j(k, j, 2 * ((k - 1) // 2))
    kf = factorial(k)
    value = Fraction(4 * kf * kf * mu(k, j).value, factorial(2 * j + 2))
    if j % 2:
        value = -value
    return RCoeff(k, j, value)


def r_convolution(k: int, j: int, n: int) -> Fraction:
    """sum_i c_n(k, i) c_n(k, j - i), straight from the closed-form coefficients."""
    cf = fourier_closed_form(k)
    return sum((cf.c(n, i) * cf.c(n, j - i) for i in range(j + 1)), Fraction(0))


_memo_lock = threading.Lock()
_inductive: List[Fraction] = [Fraction(0)]  # index 0 unused


def _inductive_step(k: int) -> Fraction:
    # Parseval divided by pi^(2k):
    #   2/(2k+1) - 2 alpha^2 = sum_j r(k, j) q_{k-j}
    alpha = a_zero(k).alpha
    rhs = Fraction(2, 2 * k + 1) - 2 * alpha * alpha
    for j in range(1, 2 * ((k - 1) // 2) + 1):
        rhs -= r_coeff(k, j).value * _inductive[k - j]
    return rhs / r_coeff(k, 0).value


def zeta_inductive(k: int) -> ZetaEvenValue:
    """zeta(2k) from Parseval's identity and the earlier values only."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if k >= len(_inductive):
        with _memo_lock:
            while len(_inductive) <= k:
                _inductive.append(_inductive_step(len(_inductive)))
    return ZetaEvenValue(k, _inductive[k])


def zeta_decimal(k: int, digits: int) -> BoundedDecimal:
    return pi_series_eval(zeta_closed_form(k).as_series(), digits)


class DirectSeries(NamedTuple):
    """Partial sum S of n^(-2k) for n <= N and the integral-test tail bound."""

    partial_sum: float
    tail_bound: float

    def brackets(self, x: float) -> bool:
        return self.partial_sum <= x <= self.partial_sum + self.tail_bound


def zeta_direct_series(k: int, N: int) -> DirectSeries:
    if k < 1 or N < 1:
        raise ValueError(f"need k >= 1 and N >= 1, got k={k}, N={N}")
    s = 2 * k
    partial = math.fsum(n ** -s for n in range(N, 0, -1))
    return DirectSeries(partial, N ** (1 - s) / (s - 1))

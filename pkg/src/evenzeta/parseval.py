"""Floating-point check of Parseval's identity for x**k.

Squared Fourier coefficients come from the exact closed form, are summed
with ``math.fsum`` (exactly rounded), and the gap to (1/pi) * int x^(2k) dx = 2 pi^(2k) / (2k+1) is compared against a
rigorous tail bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from .exact_arith import PiSeries, pi_series_eval
from .fourier import a_zero, fourier_closed_form

__all__ = [
    "ParsevalReport",
    "parseval_partial_sum",
    "parseval_target",
    "parseval_tail_bound",
    "parseval_report",
]

_DIGITS = 20  # float rendering of exact constants
_PAIR_DIGITS = 40  # rendering split into a (high, low) pair of floats
_EXACT_HEAD = 1000  # leading terms squared exactly before rendering
_CHUNK = 1 << 16


def _as_float(s: PiSeries) -> float:
    return float(pi_series_eval(s, _DIGITS))


def _as_pair(s: PiSeries) -> Tuple[float, float]:
    value = Fraction(pi_series_eval(s, _PAIR_DIGITS).value)
    hi = float(value)
    return hi, float(value - Fraction(hi))


def _require(k: int, N: int) -> None:
    if k < 1 or N < 1:
        raise ValueError(f"need k >= 1 and N >= 1, got k={k}, N={N}")


def _square_parts(k: int, N: int) -> List[float]:
    """Floats whose exact sum is 2 a_0(k)^2 + sum_{n<=N} (a_n + b_n)^2 to ~1e-30 relative.

    The first terms carry almost all of the mass, so they are squared in
    exact arithmetic and rendered as (high, low) pairs; the tail terms are
    formed and squared in floating point.
    """
    closed = fourier_closed_form(k)
    a0 = a_zero(k).value
    parts = list(_as_pair(a0 * a0 * 2))
    head = min(N, _EXACT_HEAD)
    for n in range(1, head + 1):
        c = closed.evaluate(n).total()
        parts.extend(_as_pair(c * c))
    if N > head:
        weights = [
            (_as_float(PiSeries.monomial(g, ell)), 2 * ell - k) for ell, g in enumerate(closed.gamma)
        ]
        for start in range(head + 1, N + 1, _CHUNK):
            n = np.arange(start, min(start + _CHUNK, N + 1), dtype=np.float64)
            coeff = np.zeros_like(n)
            for w, power in weights:
                coeff += w * n**power
            parts.extend((coeff * coeff).tolist())
    return parts


def parseval_partial_sum(k: int, N: int) -> float:
    """2 a_0(k)^2 + sum_{n=1}^{N} (a_n(k)^2 + b_n(k)^2), compensated."""
    _require(k, N)
    return math.fsum(_square_parts(k, N))


def parseval_target(k: int) -> float:
    """2 pi^(2k) / (2k + 1)."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    return _as_float(PiSeries.monomial(Fraction(2, 2 * k + 1), k))


def parseval_tail_bound(k: int, N: int) -> float:
    """C_k^2 / N, where |a_n(k) + b_n(k)| <= C_k / n for every n."""
    _require(k, N)
    c_k = _as_float(fourier_closed_form(k).magnitude_bound())
    return c_k * c_k / N


@dataclass(frozen=True)
class ParsevalReport:
    k: int
    N: int
    partial_sum: float
    target: float
    gap: float
    tail_bound: float

    @property
    def passed(self) -> bool:
        return 0.0 <= self.gap <= self.tail_bound * (1 + 1e-9)

    @property
    def relative_gap(self) -> float:
        return self.gap / self.target


def parseval_report(k: int, N: int) -> ParsevalReport:
    _require(k, N)
    parts = _square_parts(k, N)
    t_hi, t_lo = _as_pair(PiSeries.monomial(Fraction(2, 2 * k + 1), k))
    # one compensated sum, so the gap is not lost to rounding of target or partial sum
    gap = math.fsum([t_hi, t_lo] + [-p for p in parts])
    return ParsevalReport(
        k, N, math.fsum(parts), t_hi, gap, parseval_tail_bound(k, N)
    )

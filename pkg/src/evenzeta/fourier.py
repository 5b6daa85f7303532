"""Fourier coefficients of the 2*pi-periodic extension of x**k on (-pi, pi].

a_n(k) and b_n(k) are kept symbolic in n: every term is
``coeff * pi^(2*l) / n^e`` with the (-1)^n sign already folded into
``coeff`` for the concrete n.  Two routes build them, integration-by-parts
recurrences and the closed form, and they must agree term by term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from .exact_arith import PiSeries, factorial

__all__ = [
    "FourierCoefficientPair",
    "FourierClosedForm",
    "AZero",
    "fourier_recurrence",
    "fourier_closed_form",
    "a_zero",
    "quadrature_oracle",
    "QuadratureError",
]

# (l, coefficient, n-exponent)
Term = Tuple[int, Fraction, int]


def _normalize(terms) -> Tuple[Term, ...]:
    merged = {}
    for ell, c, e in terms:
        key = (ell, e)
        merged[key] = merged.get(key, Fraction(0)) + c
    return tuple(sorted((ell, c, e) for (ell, e), c in merged.items() if c != 0))


def _to_series(terms: Tuple[Term, ...], n: int) -> PiSeries:
    return PiSeries(tuple((ell, c / Fraction(n) ** e) for ell, c, e in terms))


@dataclass(frozen=True)
class FourierCoefficientPair:
    k: int
    n: int
    a: Tuple[Term, ...]
    b: Tuple[Term, ...]
    source: str = "recurrence"

    def a_value(self) -> PiSeries:
        return _to_series(self.a, self.n)

    def b_value(self) -> PiSeries:
        return _to_series(self.b, self.n)

    def total(self) -> PiSeries:
        """a_n(k) + b_n(k); since one of them vanishes, its square is a_n^2 + b_n^2."""
        return self.a_value() + self.b_value()

    def same_terms(self, other: "FourierCoefficientPair") -> bool:
        return (self.k, self.n, self.a, self.b) == (other.k, other.n, other.a, other.b)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def fourier_recurrence(k: int, n: int) -> FourierCoefficientPair:
    """a_n(k), b_n(k) by repeated integration by parts from b_n(1) = 2(-1)^(n+1)/n."""
    if k < 1 or n < 1:
        raise ValueError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    boundary = Fraction(-2 * _sign(n))  # 2 (-1)^(n+1)
    a: Tuple[Term, ...] = ()
    b: Tuple[Term, ...] = ((0, boundary, 1),)
    for step in range(2, k + 1):
        if step % 2 == 0:
            # a_n(k) = -(k/n) b_n(k-1); b_n(k) vanishes by parity
            a = _normalize((ell, -step * c, e + 1) for ell, c, e in b)
            b = ()
        else:
            # b_n(k) = 2 (-1)^(n+1) pi^(k-1) / n + (k/n) a_n(k-1)
            head = ((step - 1) // 2, boundary, 1)
            b = _normalize([head] + [(ell, step * c, e + 1) for ell, c, e in a])
            a = ()
    return FourierCoefficientPair(k, n, a, b, "recurrence")


@dataclass(frozen=True)
class FourierClosedForm:
    """c_n(k, l) = gamma[l] * (-1)^n for 0 <= l <= (k-1)//2, zero otherwise."""

    k: int
    gamma: Tuple[Fraction, ...]

    def gamma_at(self, ell: int) -> Fraction:
        if 0 <= ell < len(self.gamma):
            return self.gamma[ell]
        return Fraction(0)

    def c(self, n: int, ell: int) -> Fraction:
        return self.gamma_at(ell) * _sign(n)

    def evaluate(self, n: int) -> FourierCoefficientPair:
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        terms = _normalize(
            (ell, self.c(n, ell), self.k - 2 * ell) for ell in range(len(self.gamma))
        )
        if self.k % 2:
            return FourierCoefficientPair(self.k, n, (), terms, "closed form")
        return FourierCoefficientPair(self.k, n, terms, (), "closed form")

    def magnitude_bound(self) -> PiSeries:
        """sum_l |gamma_l| pi^(2l), which bounds |a_n + b_n| * n."""
        return PiSeries(tuple((ell, abs(g)) for ell, g in enumerate(self.gamma)))


def fourier_closed_form(k: int) -> FourierClosedForm:
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    kf = factorial(k)
    half = k // 2
    gamma = tuple(
        Fraction(2 * kf, factorial(2 * ell + 1)) * (-1 if (half + ell + 1) % 2 else 1)
        for ell in range((k - 1) // 2 + 1)
    )
    return FourierClosedForm(k, gamma)


@dataclass(frozen=True)
class AZero:
    """a_0(k) = alpha * pi^k with alpha = e_k / (k + 1)."""

    k: int
    value: PiSeries

    @property
    def alpha(self) -> Fraction:
        return self.value.coefficient(self.k // 2) if self.k % 2 == 0 else Fraction(0)


def a_zero(k: int) -> AZero:
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if k % 2:
        return AZero(k, PiSeries())
    return AZero(k, PiSeries.monomial(Fraction(1, k + 1), k // 2))


class QuadratureError(RuntimeError):
    """Simpson refinement ran out of its doubling budget."""


def quadrature_oracle(
    k: int,
    n: int,
    which: str,
    *,
    tol: float = 1e-12,
    max_doublings: int = 22,
) -> float:
    """Composite Simpson estimate of a Fourier integral of x**k.

    ``which`` is ``"cos"`` or ``"sin"`` for (1/pi) * int x^k trig(nx) dx, or
    ``"a0"`` for (1/2pi) * int x^k dx.  Panels double until two successive
    estimates differ by less than ``tol * max(1, |estimate|)``.
    """
    if which == "cos":
        f = lambda x: x**k * np.cos(n * x)
        scale = 1.0 / math.pi
    elif which == "sin":
        f = lambda x: x**k * np.sin(n * x)
        scale = 1.0 / math.pi
    elif which == "a0":
        f = lambda x: x**k
        scale = 0.5 / math.pi
    else:
        raise ValueError(f"which must be 'cos', 'sin' or 'a0', got {which!r}")
    a, b = -math.pi, math.pi

    # Simpson = (4 T(h/2) - T(h)) / 3; trapezoid sums reuse all earlier nodes.
    panels = 16
    h = (b - a) / panels
    x = np.linspace(a, b, panels + 1)
    fx = f(x)
    trap = h * (fx.sum() - 0.5 * (fx[0] + fx[-1]))
    previous = None
    for _ in range(max_doublings):
        mids = a + h * (np.arange(panels) + 0.5)
        trap_half = 0.5 * trap + 0.5 * h * f(mids).sum()
        simpson = (4.0 * trap_half - trap) / 3.0
        if previous is not None and abs(simpson - previous) < tol * max(1.0, abs(simpson)):
            return float(scale * simpson)
        previous = simpson
        trap = trap_half
        panels *= 2
        h *= 0.5
    raise QuadratureError(
        f"Simpson estimate for k={k}, n={n}, {which} did not settle "
        f"within {max_doublings} doublings"
    )

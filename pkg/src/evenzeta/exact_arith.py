"""Exact integers, rationals, polynomials in pi squared, and rigorous pi.

Integers are Python ``int`` (factorials and multinomials go through gmpy2
for speed), rationals are :class:`fractions.Fraction`, which is always kept
in lowest terms with a positive denominator.
"""

from __future__ import annotations

import operator
import re
import threading
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

import gmpy2

__all__ = [
    "Rational",
    "factorial",
    "binomial",
    "trinomial",
    "rat_arith",
    "format_rational",
    "parse_rational",
    "PiSeries",
    "PiApprox",
    "BoundedDecimal",
    "pi_approx",
    "pi_enclosure",
    "pi_series_eval",
    "round_half_even",
    "rational_sum",
]

Rational = Fraction
RationalLike = Union[int, Fraction]


# -- integers ---------------------------------------------------------------

_fac_lock = threading.Lock()
_fac_table = [gmpy2.mpz(1)]


def _fac(n: int) -> "gmpy2.mpz":
    table = _fac_table
    if n < len(table):
        return table[n]
    with _fac_lock:
        while len(table) <= n:
            table.append(table[-1] * len(table))
    return table[n]


def factorial(n: int) -> int:
    """Exact n!."""
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return int(_fac(n))


def binomial(n: int, r: int) -> int:
    """C(n, r), zero outside 0 <= r <= n."""
    if r < 0 or r > n or n < 0:
        return 0
    return int(gmpy2.comb(n, r))


def _trinomial(n: int, r1: int, r2: int, r3: int) -> "gmpy2.mpz":
    if r1 < 0 or r2 < 0 or r3 < 0:
        raise ValueError(f"negative part in trinomial({n}; {r1}, {r2}, {r3})")
    if r1 + r2 + r3 != n:
        raise ValueError(f"trinomial parts {r1}+{r2}+{r3} do not sum to {n}")
    return gmpy2.divexact(_fac(n), _fac(r1) * _fac(r2) * _fac(r3))


def trinomial(n: int, r1: int, r2: int, r3: int) -> int:
    """n! / (r1! r2! r3!) for a partition r1 + r2 + r3 = n."""
    return int(_trinomial(n, r1, r2, r3))


# -- rationals --------------------------------------------------------------

_RAT_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(a: RationalLike, b: RationalLike, op: str):
    """Apply ``op`` to two rationals.

    ``cmp`` returns -1, 0 or 1; ``neg`` ignores ``b``.  Division by zero
    raises :class:`ZeroDivisionError`.
    """
    a, b = Fraction(a), Fraction(b)
    if op == "neg":
        return -a
    if op == "cmp":
        return (a > b) - (a < b)
    if op == "div" and b == 0:
        raise ZeroDivisionError(f"division of {format_rational(a)} by zero")
    try:
        return _RAT_OPS[op](a, b)
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None


def format_rational(q: RationalLike) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_RAT_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; accepts only the canonical form."""
    m = _RAT_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    q = Fraction(int(m.group(1)), int(m.group(2) or 1))
    if format_rational(q) != text.strip():
        raise ValueError(f"rational literal not in lowest terms: {text!r}")
    return q


# -- polynomials in pi^2 ----------------------------------------------------


def _format_term(coeff: Fraction, ell: int) -> str:
    mag = abs(coeff)
    if ell == 0:
        return format_rational(mag)
    power = "pi^%d" % (2 * ell)
    if mag == 1:
        return power
    return f"{format_rational(mag)}*{power}"


@dataclass(frozen=True)
class PiSeries:
    """Finite sum of ``q_l * pi^(2l)`` with rational ``q_l``.

    ``terms`` is a tuple of ``(l, q_l)`` pairs sorted by ``l`` with no zero
    coefficients, so equal series compare equal structurally.
    """

    terms: Tuple[Tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        merged: Dict[int, Fraction] = {}
        for ell, q in self.terms:
            if not isinstance(ell, int) or ell < 0:
                raise ValueError(f"pi exponent index must be a nonnegative int, got {ell!r}")
            merged[ell] = merged.get(ell, Fraction(0)) + Fraction(q)
        clean = tuple(sorted((e, q) for e, q in merged.items() if q != 0))
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_dict(cls, mapping: Mapping[int, RationalLike]) -> "PiSeries":
        return cls(tuple(mapping.items()))

    @classmethod
    def constant(cls, q: RationalLike) -> "PiSeries":
        return cls(((0, Fraction(q)),))

    @classmethod
    def monomial(cls, q: RationalLike, ell: int) -> "PiSeries":
        """``q * pi^(2*ell)``."""
        return cls(((ell, Fraction(q)),))

    def coefficient(self, ell: int) -> Fraction:
        for e, q in self.terms:
            if e == ell:
                return q
        return Fraction(0)

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Largest ``l`` present, -1 for the zero series."""
        return self.terms[-1][0] if self.terms else -1

    def __iter__(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self.terms)

    def __add__(self, other: "PiSeries") -> "PiSeries":
        if not isinstance(other, PiSeries):
            return NotImplemented
        return PiSeries(self.terms + other.terms)

    def __neg__(self) -> "PiSeries":
        return PiSeries(tuple((e, -q) for e, q in self.terms))

    def __sub__(self, other: "PiSeries") -> "PiSeries":
        if not isinstance(other, PiSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiSeries(tuple((e, q * other) for e, q in self.terms))
        if not isinstance(other, PiSeries):
            return NotImplemented
        return PiSeries(
            tuple((e1 + e2, q1 * q2) for e1, q1 in self.terms for e2, q2 in other.terms)
        )

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for ell, q in reversed(self.terms):
            term = _format_term(q, ell)
            if not parts:
                parts.append(("-" if q < 0 else "") + term)
            else:
                parts.append(("- " if q < 0 else "+ ") + term)
        return " ".join(parts)


# -- pi ---------------------------------------------------------------------

# (weight, x) pairs with pi/4 = sum(weight * arctan(1/x))
MACHIN_FORMULAS = {
    "machin": ((4, 5), (-1, 239)),
    "gauss": ((12, 18), (8, 57), (-5, 239)),
}


def _arctan_inv(x: int, tol: Fraction) -> Tuple[Fraction, Fraction]:
    """Partial sum of arctan(1/x) and a bound on the remaining tail.

    The series alternates with decreasing terms, so the tail is bounded by
    the first omitted term, which is forced below ``tol``.
    """
    x2 = x * x
    num_terms = []
    power = x
    j = 0
    while True:
        term = Fraction(1, (2 * j + 1) * power)
        if term < tol:
            return _alternating_sum(num_terms), term
        num_terms.append(term)
        power *= x2
        j += 1


def _alternating_sum(terms) -> Fraction:
    # common denominator keeps this exact without a gcd per step
    if not terms:
        return Fraction(0)
    den = 1
    for t in terms:
        den = den * t.denominator // gmpy2.gcd(den, t.denominator)
    den = int(den)
    num = 0
    for j, t in enumerate(terms):
        share = den // t.denominator * t.numerator
        num += -share if j % 2 else share
    return Fraction(num, den)


@lru_cache(maxsize=64)
def _pi_rational(tol: Fraction, formula: str) -> Tuple[Fraction, Fraction]:
    """Exact rational estimate of pi and a rigorous bound on its error."""
    try:
        parts = MACHIN_FORMULAS[formula]
    except KeyError:
        raise ValueError(f"unknown Machin-type formula {formula!r}") from None
    weight_total = sum(4 * abs(w) for w, _ in parts)
    est = Fraction(0)
    err = Fraction(0)
    for w, x in parts:
        s, tail = _arctan_inv(x, tol / weight_total)
        est += 4 * w * s
        err += 4 * abs(w) * tail
    return est, err


def round_half_even(q: Fraction, digits: int) -> Decimal:
    """Round an exact rational to ``digits`` decimals, ties to even."""
    scaled = round(Fraction(q) * 10**digits)  # Fraction.__round__ is half-even
    # tuple construction is exact; scaleb would round to the context precision
    return Decimal((int(scaled < 0), tuple(map(int, str(abs(scaled)))), -digits))


@dataclass(frozen=True)
class PiApprox:
    """Decimal value of pi with a rigorous absolute error bound.

    ``lower`` and ``upper`` are the exact rational enclosure produced by the
    arctangent series before rounding.
    """

    digits: int
    value: Decimal
    error_bound: Fraction
    lower: Fraction = field(repr=False)
    upper: Fraction = field(repr=False)
    formula: str = "machin"

    def interval(self) -> Tuple[Fraction, Fraction]:
        v = Fraction(self.value)
        return v - self.error_bound, v + self.error_bound

    def contains(self, x: RationalLike) -> bool:
        lo, hi = self.interval()
        return lo <= Fraction(x) <= hi

    def __str__(self) -> str:
        return f"{self.value:f} +/- 1e-{self.digits}"


def pi_approx(digits: int, formula: str = "machin") -> PiApprox:
    """pi rounded half-even to ``digits`` decimals, error at most 10**-digits.

    The series error is pushed five decimals below the rounding step so the
    stated bound holds with room to spare and refinements nest.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    est, err = _pi_rational(Fraction(1, 10 ** (digits + 5)), formula)
    value = round_half_even(est, digits)
    bound = Fraction(1, 10**digits)
    assert abs(Fraction(value) - est) + err <= bound
    return PiApprox(digits, value, bound, est - err, est + err, formula)


@lru_cache(maxsize=64)
def pi_enclosure(decimals: int) -> Tuple[Fraction, Fraction]:
    """Outward-rounded decimal bracket ``lo <= pi <= hi`` of width ~10**-decimals."""
    est, err = _pi_rational(Fraction(1, 10 ** (decimals + 2)), "machin")
    scale = 10**decimals
    lo = Fraction((est - err) * scale // 1, scale)
    hi = Fraction(-((-(est + err) * scale) // 1), scale)
    return lo, hi


@dataclass(frozen=True)
class BoundedDecimal:
    """A decimal rendering of an exact quantity with its error budget.

    ``pi_error`` comes from replacing pi by an enclosure, ``rounding_error``
    from rounding the result to ``digits`` decimals.
    """

    value: Decimal
    digits: int
    pi_error: Fraction
    rounding_error: Fraction

    @property
    def error_bound(self) -> Fraction:
        return self.pi_error + self.rounding_error

    def interval(self) -> Tuple[Fraction, Fraction]:
        v = Fraction(self.value)
        return v - self.error_bound, v + self.error_bound

    def contains(self, x: RationalLike) -> bool:
        lo, hi = self.interval()
        return lo <= Fraction(x) <= hi

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return f"{self.value:f} +/- 1e-{self.digits}"


def _series_interval(s: PiSeries, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    total_lo = total_hi = Fraction(0)
    for ell, q in s:
        a, b = lo ** (2 * ell), hi ** (2 * ell)
        if q >= 0:
            total_lo += q * a
            total_hi += q * b
        else:
            total_lo += q * b
            total_hi += q * a
    return total_lo, total_hi


def pi_series_eval(s: PiSeries, digits: int) -> BoundedDecimal:
    """Evaluate ``s`` at pi to ``digits`` decimals with total error <= 10**-digits."""
    if digits < 0:
        raise ValueError("digits must be >= 0")
    target = Fraction(1, 2 * 10**digits)
    guard = 10
    while True:
        lo, hi = pi_enclosure(digits + guard)
        v_lo, v_hi = _series_interval(s, lo, hi)
        half_width = (v_hi - v_lo) / 2
        if half_width <= target:
            break
        guard += 10 + guard // 2
    mid = (v_lo + v_hi) / 2
    value = round_half_even(mid, digits)
    return BoundedDecimal(value, digits, half_width, abs(Fraction(value) - mid))


def rational_sum(values: Iterable[RationalLike]) -> Fraction:
    """Exact sum; empty sums are zero."""
    total = Fraction(0)
    for v in values:
        total += v
    return total

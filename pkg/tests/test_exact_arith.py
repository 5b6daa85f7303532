import math
from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evenzeta.exact_arith import (
    PiSeries,
    binomial,
    factorial,
    format_rational,
    parse_rational,
    pi_approx,
    pi_series_eval,
    rat_arith,
    round_half_even,
    trinomial,
)


def product_oracle(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def pascal_rows(n_max):
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        rows.append([1] + [prev[i - 1] + prev[i] for i in range(1, n)] + [1])
    return rows


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (6, 720)])
def test_factorial_examples(n, expected):
    assert factorial(n) == expected


def test_factorial_matches_product():
    for n in range(0, 120):
        assert factorial(n) == product_oracle(n)
    assert factorial(602) == product_oracle(602)  # (2k+2)! at k = 300


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0
    for n in range(10):
        assert binomial(n, 0) == 1


def test_binomial_against_pascal_triangle():
    rows = pascal_rows(200)
    for n in range(201):
        for r in range(n + 1):
            assert binomial(n, r) == rows[n][r]


def test_pascal_rule_sweep():
    for n in range(2, 201):
        for r in range(1, n):
            assert binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r)


@pytest.mark.parametrize(
    "args,expected",
    [((4, 0, 1, 3), 4), ((6, 2, 1, 3), 60), ((7, 7, 0, 0), 1)],
)
def test_trinomial_examples(args, expected):
    n, r1, r2, r3 = args
    assert trinomial(*args) == expected
    assert expected == product_oracle(n) // (product_oracle(r1) * product_oracle(r2) * product_oracle(r3))


@pytest.mark.parametrize("args", [(4, 1, 1, 1), (4, -1, 2, 3), (3, 4, 0, -1)])
def test_trinomial_rejects_bad_partitions(args):
    with pytest.raises(ValueError):
        trinomial(*args)


@settings(max_examples=200)
@given(st.integers(0, 80), st.integers(0, 80), st.integers(0, 80))
def test_trinomial_is_binomial_product(r1, r2, r3):
    n = r1 + r2 + r3
    assert trinomial(n, r1, r2, r3) == binomial(n, r1) * binomial(n - r1, r2)


def test_rat_arith_examples():
    assert rat_arith(Fraction(1, 6), Fraction(-1, 2), "add") == Fraction(-1, 3)
    x = Fraction(7, 9)
    assert rat_arith(x, 0, "add") == x
    assert Fraction(2, 4) == Fraction(1, 2) and format_rational(Fraction(2, 4)) == "1/2"
    assert rat_arith(1, 2, "cmp") == -1
    assert rat_arith(x, x, "cmp") == 0
    assert rat_arith(x, 5, "neg") == -x
    assert rat_arith(Fraction(3, 4), Fraction(3, 8), "div") == 2


def cross_multiply(p1, q1, p2, q2):
    num, den = p1 * q2 + p2 * q1, q1 * q2
    g = math.gcd(num, den)
    return num // g, den // g


@given(st.integers(-1000, 1000), st.integers(1, 1000), st.integers(-1000, 1000), st.integers(1, 1000))
def test_rat_add_matches_cross_multiplication(p1, q1, p2, q2):
    got = rat_arith(Fraction(p1, q1), Fraction(p2, q2), "add")
    assert (got.numerator, got.denominator) == cross_multiply(p1, q1, p2, q2)
    assert got.denominator > 0


def test_rat_arith_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        rat_arith(1, 0, "div")
    with pytest.raises(ValueError):
        rat_arith(1, 2, "pow")


rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q) < 10**6)


@given(rationals)
def test_rational_canonical_string_round_trips(q):
    text = format_rational(q)
    assert parse_rational(text) == q
    assert format_rational(parse_rational(text)) == text
    if "/" in text:
        assert text.split("/")[1].isdigit()


def test_rational_serialization_examples():
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(0)) == "0"
    with pytest.raises(ValueError):
        parse_rational("2/4")
    with pytest.raises(ValueError):
        parse_rational("1/-2")


def test_round_half_even():
    assert round_half_even(Fraction(1, 8), 2) == Decimal("0.12")
    assert round_half_even(Fraction(3, 8), 2) == Decimal("0.38")
    assert round_half_even(Fraction(-5, 2), 0) == Decimal("-2")


series = st.dictionaries(st.integers(0, 4), st.fractions(max_denominator=50), max_size=4).map(
    PiSeries.from_dict
)


def test_pi_series_normalization():
    s = PiSeries(((1, Fraction(1, 2)), (0, Fraction(3)), (1, Fraction(-1, 2)), (2, Fraction(0))))
    assert s.terms == ((0, Fraction(3)),)
    assert PiSeries.from_dict({}).is_zero()
    with pytest.raises(ValueError):
        PiSeries(((-1, Fraction(1)),))


def test_pi_series_rendering():
    assert str(PiSeries.from_dict({0: -12, 1: 2})) == "2*pi^2 - 12"
    assert str(PiSeries.from_dict({1: Fraction(1, 6)})) == "1/6*pi^2"
    assert str(PiSeries.from_dict({2: -1, 0: Fraction(1, 3)})) == "-pi^4 + 1/3"
    assert str(PiSeries()) == "0"


@given(series, series, series)
def test_pi_series_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == PiSeries()


def test_pi_approx_examples():
    assert str(pi_approx(20).value) == "3.14159265358979323846"
    assert pi_approx(20).error_bound == Fraction(1, 10**20)
    one = pi_approx(1)
    assert str(one.value) == "3.1"
    lo, hi = one.interval()
    assert lo <= Fraction(314159, 100000) <= hi
    assert lo < one.lower and one.upper < hi


def test_pi_approx_two_formulas_agree():
    for digits in (1, 5, 20, 50, 100, 300):
        assert pi_approx(digits, "machin").value == pi_approx(digits, "gauss").value


def test_pi_approx_against_mpmath():
    mpmath = pytest.importorskip("mpmath")
    with mpmath.workdps(250):
        reference = Fraction(str(+mpmath.pi))
    for digits in (10, 100, 200):
        assert pi_approx(digits).contains(reference)


@pytest.mark.parametrize("digits", [5, 10, 40])
def test_pi_approx_square_sanity(digits):
    v = Fraction(pi_approx(digits).value)
    assert Fraction("9.8695") < v * v < Fraction("9.8697")


def test_pi_approx_nested_refinement():
    for d in range(1, 91, 7):
        lo1, hi1 = pi_approx(d).interval()
        lo2, hi2 = pi_approx(d + 10).interval()
        assert lo1 <= lo2 and hi2 <= hi1


def test_pi_series_eval_constant_has_no_pi_error():
    r = pi_series_eval(PiSeries.constant(Fraction(5, 7)), 12)
    assert r.pi_error == 0
    assert r.contains(Fraction(5, 7))
    assert str(r.value) == "0.714285714286"


def test_pi_series_eval_empty():
    r = pi_series_eval(PiSeries(), 10)
    assert r.value == 0 and r.error_bound == 0


def test_pi_series_eval_zeta2_against_direct_series():
    # sum_{n<=N} 1/n^2 + 1/(N+1) < zeta(2) < sum_{n<=N} 1/n^2 + 1/N
    N = 20000
    partial = sum(Fraction(1, n * n) for n in range(1, N + 1))
    lower, upper = partial + Fraction(1, N + 1), partial + Fraction(1, N)
    r = pi_series_eval(PiSeries.monomial(Fraction(1, 6), 1), 12)
    lo, hi = r.interval()
    assert lo < upper and lower < hi
    assert str(r.value).startswith("1.644934066")


@settings(max_examples=40, deadline=None)
@given(series, st.integers(1, 40))
def test_pi_series_eval_error_budget(s, digits):
    r = pi_series_eval(s, digits)
    assert r.error_bound <= Fraction(1, 10**digits)
    # both enclosures hold the true value, so they must overlap
    lo, hi = r.interval()
    fine_lo, fine_hi = pi_series_eval(s, digits + 15).interval()
    assert lo <= fine_hi and fine_lo <= hi
    if s.degree <= 0:
        assert r.contains(s.coefficient(0))

"""Exit criteria, one test each, at the stated tolerances and time targets."""

from fractions import Fraction

from evenzeta.bernoulli import check_eq3, check_eq4, check_reflection
from evenzeta.exact_arith import pi_approx, pi_series_eval
from evenzeta.fourier import fourier_closed_form, fourier_recurrence, quadrature_oracle
from evenzeta.identities import (
    REFLECTION_POINTS,
    additivity_check,
    eq5_check,
    eq6_check,
    eq15_check,
    eq16_check,
    lemma1_check,
)
from evenzeta.parseval import parseval_report
from evenzeta.zeta import zeta_closed_form, zeta_decimal, zeta_direct_series, zeta_inductive


def test_ac1_basel_value(criterion):
    with criterion(1, "zeta(2) = pi^2/6 exactly", 1.0):
        assert zeta_closed_form(1).q == Fraction(1, 6)


def test_ac2_cross_method_exactness(criterion):
    with criterion(2, "zeta_inductive(k) == zeta_closed_form(k), k = 1..100", 10.0):
        mismatched = [k for k in range(1, 101) if zeta_inductive(k).q != zeta_closed_form(k).q]
        assert mismatched == []


def test_ac3_lemma1(criterion):
    with criterion(3, "Lemma 1 exact for k = 1..300", 10.0):
        assert lemma1_check(1).lhs == lemma1_check(1).rhs == 4
        assert lemma1_check(2).lhs == lemma1_check(2).rhs == 66
        failed = [k for k in range(1, 301) if not lemma1_check(k).passed]
        assert failed == []


def test_ac4_identity_suite(criterion):
    with criterion(4, "eq3/eq4/reflection/eq5/eq6/eq15/eq16 + additivity", 30.0):
        bad = [r for r in (check_eq3(n) for n in range(2, 501)) if not r.passed]
        bad += [r for r in (check_eq4(n) for n in range(1, 502, 2)) if not r.passed]
        bad += [
            r
            for r in (check_reflection(n, x) for n in range(61) for x in REFLECTION_POINTS)
            if not r.passed
        ]
        for k in range(1, 301):
            bad += [r for r in (eq5_check(k), eq6_check(k), additivity_check(k)) if not r.passed]
        for k in range(1, 151):
            bad += [r for r in (eq15_check(k), eq16_check(k)) if not r.passed]
        assert bad == []


def test_ac5_fourier_consistency(criterion):
    with criterion(5, "recurrence == closed form (k <= 30); quadrature within 1e-8", 5.0):
        for k in range(1, 31):
            cf = fourier_closed_form(k)
            for n in (1, 2):
                assert fourier_recurrence(k, n).same_terms(cf.evaluate(n)), (k, n)
        worst = 0.0
        for k in range(1, 9):
            cf = fourier_closed_form(k)
            for n in range(1, 17):
                pair = cf.evaluate(n)
                for which, exact in (("cos", pair.a_value()), ("sin", pair.b_value())):
                    err = abs(quadrature_oracle(k, n, which) - float(pi_series_eval(exact, 20)))
                    worst = max(worst, err)
        assert worst <= 1e-8, worst


def test_ac6_parseval_bracketing(criterion):
    with criterion(6, "Parseval bracketing k = 1..6, N = 1e5", 10.0):
        N = 10**5
        for k in range(1, 7):
            r = parseval_report(k, N)
            assert 0 <= r.gap <= r.tail_bound * (1 + 1e-9), (k, r)
            if k == 1:
                assert r.gap / r.target <= 1e-4


def test_ac7_decimal_bracketing(criterion):
    with criterion(7, "direct series brackets zeta_decimal(k, 30), k = 1..10", 1.0):
        for k in range(1, 11):
            s = zeta_direct_series(k, 10**3)
            assert s.brackets(float(zeta_decimal(k, 30))), k


def test_ac8_pi_self_consistency(criterion):
    with criterion(8, "two Machin formulas agree to 100 digits; nested refinement", 1.0):
        a, b = pi_approx(100, "machin"), pi_approx(100, "gauss")
        assert a.value == b.value
        assert a.contains(b.lower) and a.contains(b.upper)
        for d in (1, 10, 50, 90, 100):
            lo1, hi1 = pi_approx(d).interval()
            lo2, hi2 = pi_approx(d + 10).interval()
            assert lo1 <= lo2 and hi2 <= hi1

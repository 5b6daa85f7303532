"""Exact values of zeta(2k) and certificates for the identities behind them."""

__version__ = "0.1.0"

from .bernoulli import bernoulli_number, bernoulli_poly_eval, check_eq3, check_eq4, check_reflection
from .checks import IdentityCheckResult
from .exact_arith import PiSeries, binomial, factorial, pi_approx, pi_series_eval, trinomial
from .fourier import a_zero, fourier_closed_form, fourier_recurrence, quadrature_oracle
from .identities import eq5_check, eq6_check, eq15_check, eq16_check, lemma1_check, run_all
from .parseval import parseval_report
from .zeta import zeta_closed_form, zeta_decimal, zeta_direct_series, zeta_inductive

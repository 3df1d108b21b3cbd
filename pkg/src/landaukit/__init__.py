"""Landau constants: exact expansion coefficients and rigorous error-bound checks."""

from .coefficients import (
    CoefficientTable,
    beta,
    beta_det,
    c_coeff,
    d_coeff,
    granath_a,
    r_coeff,
    rho,
)
from .landau import LandauSequence, diffeq_residual, landau_exact, symmetric_residual
from .numerics import (
    Ball,
    Ordering,
    PrecisionPolicy,
    Rational,
    ball_from_rational,
    cmp_strict,
    const_gamma,
    const_log,
    const_pi,
    factorial,
)
from .series import (
    TruncSeries,
    hyp_series,
    rho_from_series,
    rho_series_table,
    series_mul,
    series_reciprocal,
    sin_half_sq_series,
    u_series,
)
from .verify import (
    CheckResult,
    Status,
    VerificationReport,
    beta_growth_report,
    check_classical,
    check_granath,
    check_lemma22,
    check_lemma23,
    check_rho_sandwich,
    check_thm1,
    check_thm2,
    check_thm3,
    eval_epsilon,
    figure1_data,
)

__version__ = "0.1.0"

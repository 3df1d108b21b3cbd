"""Acceptance criteria, each run at its stated scale and tolerance.

One PASS/FAIL line per criterion is printed in the terminal summary.  Two
criteria are expected to fail: the published two-decimal ratio at k = 0
(192/11 rounds to 17.45) and the rho_k sandwich for k >= 13.  See the README.
"""

import time
from fractions import Fraction
from math import factorial

import pytest

from landaukit.coefficients import CoefficientTable, beta_det, c_coeff
from landaukit.landau import diffeq_residual, symmetric_residual
from landaukit.numerics import format_decimal
from landaukit.series import compose, hyp_series, rho_series_table, sin_half_sq_series, sin_sq_series
from landaukit.verify import (
    Status,
    check_classical,
    check_granath,
    check_lemma22,
    check_lemma23,
    check_rho_sandwich,
    check_thm1,
    check_thm2,
    check_thm3,
    figure1_data,
)

TABLE_ONE = [
    Fraction(11, 192),
    Fraction(-1541, 122880),
    Fraction(63433, 8257536),
    Fraction(-9199901, 1006632960),
    Fraction(317959723, 17716740096),
    Fraction(-14849190321163, 281406257233920),
    Fraction(717209117969, 3298534883328),
]

TABLE_TWO = ["17.46", "27.41", "32.65", "35.30", "36.67", "37.41", "37.86", "38.15", "38.36", "38.51"]


def _tally(report):
    s = report.summary
    return f"pass={s['pass']} fail={s['fail']} unknown={s['unknown']}"


@pytest.fixture(scope="module")
def thm1_report():
    start = time.perf_counter()
    report = check_thm1(1000, 20)
    return report, time.perf_counter() - start


def test_c01_table_one(acceptance):
    with acceptance(1, "beta_2..beta_14 equal the published rationals, < 1 s") as note:
        start = time.perf_counter()
        table = CoefficientTable()
        values = [table.beta(2 * s) for s in range(1, 8)]
        elapsed = time.perf_counter() - start
        note(f"{elapsed:.4f} s")
        assert values == TABLE_ONE
        assert elapsed < 1


def test_c02_triple_oracles(acceptance):
    with acceptance(2, "recurrence, determinant and series agree for k <= 25, < 60 s") as note:
        start = time.perf_counter()
        table = CoefficientTable()
        rec = [table.beta(2 * k) for k in range(1, 26)]
        det = [beta_det(2 * k) for k in range(1, 26)]
        rho = rho_series_table(25)
        ser = [(-1) ** (k + 1) * rho[k] * factorial(2 * k - 1) for k in range(1, 26)]
        elapsed = time.perf_counter() - start
        note(f"{elapsed:.2f} s")
        assert rec == det == ser
        assert elapsed < 60


def test_c03_ratio_table(acceptance):
    with acceptance(3, "rho_k/rho_{k+1} table to 2 dp, and below 44 pi^2/9 for k <= 50") as note:
        report = check_lemma22(50)
        got = [row["ratio"] for row in report.table[:10]]
        mismatches = [(k, g, want) for k, (g, want) in enumerate(zip(got, TABLE_TWO)) if g != want]
        note(f"bound {_tally(report)}")
        if mismatches:
            note("mismatch " + ", ".join(f"k={k}: {g} vs published {w}" for k, g, w in mismatches))
        assert report.ok
        assert not mismatches, mismatches


def test_c04_thm1_sweep(acceptance, thm1_report):
    with acceptance(4, "sign of eps_l(N) for n <= 1000, l <= 20") as note:
        report, elapsed = thm1_report
        top = max(r.precision_used for r in report.results)
        note(f"{_tally(report)}; max precision {top} bits; {elapsed:.1f} s")
        assert report.summary["total"] == 1001 * 20
        assert report.ok


def test_c05_thm2_sweep(acceptance, thm1_report):
    with acceptance(5, "envelope 0 < |eps_l| < |beta_2l|/N^2l for n <= 1000, l <= 20, implies thm1") as note:
        report = check_thm2(1000, 20)
        note(_tally(report))
        assert report.ok
        t1 = {r.point: r.status for r in thm1_report[0].results}
        extra = {r.point: r.status for r in check_thm1(1000, 21, l_min=21).results}
        t1.update(extra)
        for r in report.results:
            if r.status is Status.PASS:
                n, l = r.point
                assert t1[(n, l)] is Status.PASS and t1[(n, l + 1)] is Status.PASS


def test_c06_thm3_sweep(acceptance):
    with acceptance(6, "two-sided partial-sum bounds for n <= 1000, m <= 10, k <= 10") as note:
        report = check_thm3(1000, 10, 10)
        note(_tally(report))
        assert report.summary["total"] == 1001 * 20
        assert report.ok


def test_c07_lemma23(acceptance):
    with acceptance(7, "exact sign of r_{l,s}, l <= 20, span 100, < 30 s") as note:
        start = time.perf_counter()
        report = check_lemma23(20, 100)
        elapsed = time.perf_counter() - start
        note(f"{_tally(report)}; {elapsed:.2f} s")
        assert report.ok and report.summary["unknown"] == 0
        assert elapsed < 30


def test_c08_rho_sandwich(acceptance):
    with acceptance(8, "rho_k sandwich for 10 <= k <= 50") as note:
        report = check_rho_sandwich(10, 50)
        failing = [r.point[0] for r in report.results if r.status is not Status.PASS]
        note(_tally(report))
        if failing:
            note(f"fails for k = {failing[0]}..{failing[-1]}")
        assert report.ok, f"sandwich fails for k in {failing}"


def test_c09_classical(acceptance):
    with acceptance(9, "classical two-sided bound for 1 <= n <= 1000") as note:
        report = check_classical(1000)
        note(_tally(report))
        assert report.ok


def test_c10_figure_ratios(acceptance):
    with acceptance(10, "eps_l/(beta_2l/N^2l) in (0,1) for (l=2, n<=30) and (l=16, n<=50)") as note:
        rows = figure1_data(2, 30) + figure1_data(16, 50)
        note(f"{sum(r.status is Status.PASS for r in rows)}/{len(rows)} rows inside")
        assert len(rows) == 31 + 51
        assert all(r.status is Status.PASS for r in rows)


def test_c11_exactness(acceptance):
    with acceptance(11, "exact residuals, alternating sum, ODE and quadratic transformation") as note:
        assert all(diffeq_residual(n) == 0 for n in range(0, 1001))
        assert all(symmetric_residual(n) == 0 for n in range(1, 1001))
        table = CoefficientTable()
        for l in range(1, 26):
            total = sum((-1) ** k * c_coeff(l - k, l + 1) * table.rho(l - k) for k in range(l + 1))
            assert total == 0
        f = hyp_series(Fraction(1, 4), Fraction(1, 4), 1, 40)
        assert all((m + 1) ** 2 * f[m + 1] == (m + Fraction(1, 4)) ** 2 * f[m] for m in range(40))
        left = compose(hyp_series(Fraction(1, 4), Fraction(1, 4), 1, 40), sin_half_sq_series(40))
        right = compose(hyp_series(Fraction(1, 2), Fraction(1, 2), 1, 40), sin_sq_series(40, Fraction(1, 4)))
        assert left == right
        note("n <= 1000, l <= 25, order 40")


def test_c12_granath_report(acceptance):
    with acceptance(12, "conjectured signs for m <= 12, n <= 500 (report only)") as note:
        report = check_granath(12, 500)
        note(_tally(report))
        assert report.conjecture
        assert report.summary["total"] == 13 * 500
        if report.summary["fail"]:
            first = report.failures()[0]
            raise acceptance.Finding(f"first failing point (m, n) = {first.point}")

import itertools
import threading
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from landaukit.coefficients import (
    CoefficientTable,
    beta,
    beta_det,
    c_coeff,
    d_coeff,
    default_table,
    det_fraction_free,
    granath_a,
    hessenberg_matrix,
    r_coeff,
    rho,
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

K_MAX = 40


# -- an independent route: substitute the ansatz into the symmetric equation --


def _binom_neg(s, j, sign):
    """Coefficient of x^j in (1 + sign*x)^(-s)."""
    return (-sign) ** j * comb(s + j - 1, j)


def _times_quad(coeffs, sign):
    """Multiply a coefficient list by (1 + sign*x/4)^2 = 1 + sign*x/2 + x^2/16."""
    out = [Fraction(0)] * len(coeffs)
    for i, c in enumerate(coeffs):
        for j, w in enumerate((Fraction(1), Fraction(sign, 2), Fraction(1, 16))):
            if i + j < len(out):
                out[i + j] += c * w
    return out


def betas_by_substitution(S):
    """beta_1..beta_S from w(N) = ln N + sum beta_s N^-s plugged into
    (1+q)^2 w(N+1) - (2+2q^2) w(N) + (1-q)^2 w(N-1) = 0 with q = x/4, x = 1/N,
    solving for one unknown per power of x.
    """
    M = S + 3
    log_part = [Fraction(0)] * M
    for sign in (1, -1):
        ln = [Fraction(0)] + [Fraction(-((-sign) ** m), m) for m in range(1, M)]
        for i, c in enumerate(_times_quad(ln, sign)):
            log_part[i] += c

    def kernel(s):
        # (1+x/4)^2 (1+x)^-s + (1-x/4)^2 (1-x)^-s - 2 - x^2/8, shifted by x^s
        k = [Fraction(0)] * M
        for sign in (1, -1):
            for i, c in enumerate(_times_quad([Fraction(_binom_neg(s, j, sign)) for j in range(M)], sign)):
                k[i] += c
        k[0] -= 2
        k[2] -= Fraction(1, 8)
        return [Fraction(0)] * s + k[: M - s]

    total = log_part[:]
    betas = {}
    for s in range(1, S + 1):
        ker = kernel(s)
        assert ker[s] == ker[s + 1] == 0 and ker[s + 2] == s * s
        b = -total[s + 2] / ker[s + 2]
        betas[s] = b
        for i in range(M):
            total[i] += b * ker[i]
    assert all(t == 0 for t in total[: S + 3])
    return betas


def test_recurrence_matches_substitution():
    oracle = betas_by_substitution(24)
    for s in range(1, 25):
        assert beta(s) == oracle[s]


# -- examples ---------------------------------------------------------------


def test_d_examples():
    assert d_coeff(1, 2) == 4
    assert d_coeff(0, 2) == Fraction(11, 48)
    assert d_coeff(1, 3) == Fraction(51, 8)
    assert d_coeff(5, 6) == 100


@pytest.mark.parametrize("j,s", [(0, 1), (0, 0), (1, 1), (3, 2), (-1, 5)])
def test_d_domain(j, s):
    with pytest.raises(ValueError):
        d_coeff(j, s)


def test_d_positive():
    for s in range(2, 60):
        for j in range(0, s):
            assert d_coeff(j, s) > 0


def test_table_one():
    assert [beta(2 * s) for s in range(1, 8)] == TABLE_ONE
    assert default_table.betas(7) == TABLE_ONE


def test_beta_index_rules():
    for k in range(0, 20):
        assert beta(2 * k + 1) == 0
    with pytest.raises(ValueError):
        beta(0)
    with pytest.raises(ValueError):
        beta(-2)


def test_rho_examples():
    assert rho(0) == 1
    assert rho(1) == Fraction(11, 192)
    assert rho(2) == Fraction(1541, 737280)
    with pytest.raises(ValueError):
        rho(-1)


def test_c_examples():
    assert c_coeff(2, 3) == Fraction(1, 2)
    assert c_coeff(1, 3) == Fraction(51, 1536)
    assert factorial(1) * d_coeff(1, 3) / (8 * 4 * factorial(3)) == Fraction(51, 1536)
    for bad in ((3, 3), (-1, 4), (0, 1)):
        with pytest.raises(ValueError):
            c_coeff(*bad)


def test_r_examples():
    assert r_coeff(1, 2) == Fraction(11, 48) == 4 * beta(2)
    assert r_coeff(2, 3) == Fraction(-1541, 7680) == 16 * beta(4)
    for s in range(2, 30):
        assert r_coeff(1, s) == d_coeff(0, s)
    with pytest.raises(ValueError):
        r_coeff(2, 2)
    with pytest.raises(ValueError):
        r_coeff(0, 3)


def test_beta_det_examples():
    assert beta_det(2) == d_coeff(0, 2) / 4 == Fraction(11, 192)
    assert beta_det(4) == Fraction(-1541, 122880)
    assert beta_det(12) == Fraction(-14849190321163, 281406257233920)
    with pytest.raises(ValueError):
        beta_det(3)


def test_granath_examples():
    assert granath_a(1) == -4
    assert granath_a(2) == Fraction(20, 3)
    assert granath_a(3) == 96
    # against the classical expansion -1/(4n) + 5/(192 n^2) + 3/(128 n^3)
    assert granath_a(1) / 16 == Fraction(-1, 4)
    assert granath_a(2) / 16**2 == Fraction(5, 192)
    assert granath_a(3) / 16**3 == Fraction(3, 128)


def test_granath_against_reexpansion():
    # pi G_{n-1} ~ ln(16n) + gamma + ln(1 - 4y) + sum_s beta_s (16y)^s (1 - 4y)^-s, y = 1/(16n)
    K = 16
    coeffs = [Fraction(0)] * (K + 1)
    for m in range(1, K + 1):
        coeffs[m] -= Fraction(4**m, m)
    for s in range(1, K + 1):
        b = beta(s)
        for j in range(0, K + 1 - s):
            coeffs[s + j] += b * 16**s * comb(s + j - 1, j) * 4**j
    for k in range(1, K + 1):
        assert granath_a(k) == coeffs[k]


# -- invariants ---------------------------------------------------------------


def test_sign_alternation():
    for k in range(1, K_MAX + 1):
        assert (-1) ** (k + 1) * beta(2 * k) > 0
        assert rho(k) > 0


def test_leading_coefficient_identity():
    for l in range(1, K_MAX + 1):
        assert r_coeff(l, l + 1) == 4 * l * l * beta(2 * l)


def test_rho_alternating_sum():
    for l in range(1, K_MAX + 1):
        total = sum((-1) ** k * c_coeff(l - k, l + 1) * rho(l - k) for k in range(l + 1))
        assert total == 0, l


def test_c_d_link():
    for s in range(2, 41):
        for k in range(1, s):
            assert c_coeff(k, s) * 8 * (s - 1) ** 2 * factorial(2 * s - 3) == factorial(2 * k - 1) * d_coeff(k, s)


def test_determinant_route():
    for l in range(1, 16):
        assert beta_det(2 * l) == beta(2 * l)


def test_hessenberg_shape():
    m = hessenberg_matrix(5)
    for i in range(5):
        for c in range(5):
            if c < i - 1:
                assert m[i][c] == 0
            else:
                assert m[i][c] > 0


def test_fresh_table_agrees():
    fresh = CoefficientTable()
    assert fresh.beta(30) == beta(30)
    assert [fresh.rho(k) for k in range(12)] == [rho(k) for k in range(12)]


def test_concurrent_fill():
    table = CoefficientTable()
    out = {}

    def work(i):
        out[i] = [table.beta(2 * k) for k in range(30, 0, -1)]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    expected = [beta(2 * k) for k in range(30, 0, -1)]
    assert all(v == expected for v in out.values())


# -- determinant against Laplace expansion ------------------------------------


def laplace_det(m):
    n = len(m)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        prod = Fraction(1)
        for i, p in enumerate(perm):
            prod *= m[i][p]
        total += (-1) ** inv * prod
    return total


small = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_laplace(m):
    assert det_fraction_free([row[:] for row in m]) == laplace_det(m)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_bareiss_integer_and_singular(m):
    fm = [[Fraction(x) for x in row] for row in m]
    assert det_fraction_free(fm) == laplace_det(fm)
    if len(m) > 1:
        repeated = [row[:] for row in fm]
        repeated[-1] = repeated[0][:]
        assert det_fraction_free(repeated) == 0

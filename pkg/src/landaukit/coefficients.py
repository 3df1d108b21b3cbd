"""Exact coefficient families of the n + 3/4 expansion of the Landau constants.

``pi * G_n ~ ln N + gamma + 4 ln 2 + sum_s beta_{2s} / N^{2s}`` with ``N = n + 3/4``.

Indexing follows the subscripts used in the expansion: ``beta(2k)`` is the
coefficient of ``N^{-2k}``; odd subscripts are legal and give zero.
"""

from __future__ import annotations

import functools
import threading
from fractions import Fraction
from math import factorial, gcd

__all__ = [
    "CoefficientTable",
    "d_coeff",
    "beta",
    "rho",
    "c_coeff",
    "r_coeff",
    "beta_det",
    "granath_a",
    "hessenberg_matrix",
    "det_fraction_free",
    "default_table",
]


@functools.lru_cache(maxsize=None)
def d_coeff(j: int, s: int) -> Fraction:
    """Coefficient d_{j,s} of the recurrence for beta.

    Defined for j >= 1, s >= j + 1 and for j = 0, s >= 2; always positive.
    """
    if j == 0:
        if s < 2:
            raise ValueError(f"d_coeff(0, {s}) requires s >= 2")
        return Fraction(1, s) - Fraction(1, 2 * s - 1) + Fraction(1, 16 * (s - 1))
    if j < 0 or s < j + 1:
        raise ValueError(f"d_coeff({j}, {s}) outside j >= 1, s >= j + 1")
    if s == j + 1:
        return Fraction(4 * j * j)
    first = Fraction(
        (2 * s + 2 * j - 2) * factorial(2 * s - 2),
        factorial(2 * s - 2 * j) * factorial(2 * j - 1),
    )
    second = Fraction(
        factorial(2 * s - 3),
        8 * factorial(2 * s - 2 * j - 2) * factorial(2 * j - 1),
    )
    return first + second


class CoefficientTable:
    """Memoized beta_{2k} and rho_k, filled bottom-up on demand.

    Safe to share between threads: filling happens under a lock and stored
    values are immutable Fractions.
    """

    def __init__(self):
        self._beta = {}  # k -> beta_{2k}
        self._lock = threading.Lock()

    def _fill(self, k: int) -> None:
        with self._lock:
            for m in range(len(self._beta) + 1, k + 1):
                acc = -d_coeff(0, m + 1)
                for j in range(1, m):
                    acc += d_coeff(j, m + 1) * self._beta[j]
                self._beta[m] = -acc / (4 * m * m)

    def beta(self, index: int) -> Fraction:
        if index < 1:
            raise ValueError(f"beta index must be positive, got {index}")
        if index % 2:
            return Fraction(0)
        k = index // 2
        if k not in self._beta:
            self._fill(k)
        return self._beta[k]

    def rho(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError(f"rho index must be nonnegative, got {k}")
        if k == 0:
            return Fraction(1)
        sign = 1 if k % 2 else -1
        return sign * self.beta(2 * k) / factorial(2 * k - 1)

    def betas(self, count: int) -> list[Fraction]:
        """[beta_2, beta_4, ..., beta_{2 count}]."""
        return [self.beta(2 * k) for k in range(1, count + 1)]

    def __len__(self) -> int:
        return len(self._beta)


default_table = CoefficientTable()


def beta(index: int) -> Fraction:
    return default_table.beta(index)


def rho(k: int) -> Fraction:
    return default_table.rho(k)


def c_coeff(k: int, s: int) -> Fraction:
    """Normalized coefficient c_{k,s}, 0 <= k <= s - 1.

    Closed form in terms of factorials; c_{s-1,s} = 1/2.  Related to d by
    c_{k,s} * 8 (s-1)^2 (2s-3)! = (2k-1)! d_{k,s} for k >= 1.
    """
    if s < 2 or not 0 <= k <= s - 1:
        raise ValueError(f"c_coeff({k}, {s}) requires s >= 2 and 0 <= k <= s - 1")
    if k == s - 1:
        return Fraction(1, 2)
    gap = 2 * (s - k)
    return (
        Fraction(1, 2 * factorial(gap))
        + Fraction(k, 2 * (s - 1) * factorial(gap))
        + Fraction(1, 64 * (s - 1) ** 2 * factorial(gap - 2))
    )


def r_coeff(l: int, s: int, table: CoefficientTable | None = None) -> Fraction:
    """Taylor coefficient r_{l,s} of the difference-equation residual R_l."""
    if l < 1 or s < l + 1:
        raise ValueError(f"r_coeff({l}, {s}) requires l >= 1 and s >= l + 1")
    table = table or default_table
    acc = -d_coeff(0, s)
    for j in range(1, l):
        acc += d_coeff(j, s) * table.beta(2 * j)
    return -acc


def hessenberg_matrix(l: int) -> list[list[Fraction]]:
    """The l x l upper Hessenberg matrix with entries d_{i, c+2}."""
    return [
        [d_coeff(i, c + 2) if c >= i - 1 else Fraction(0) for c in range(l)]
        for i in range(l)
    ]


def det_fraction_free(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant by Bareiss elimination on an integer-scaled copy."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in matrix:
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append([int(x * den) for x in row])
        scale *= den
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            lead = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return Fraction(sign * rows[n - 1][n - 1]) / scale


def beta_det(index: int) -> Fraction:
    """beta_{2l} from the closed-form Hessenberg determinant (independent of the recurrence)."""
    if index < 2 or index % 2:
        raise ValueError(f"beta_det needs a positive even index, got {index}")
    l = index // 2
    sign = 1 if l % 2 else -1
    return sign * det_fraction_free(hessenberg_matrix(l)) / (4**l * factorial(l) ** 2)


def granath_a(k: int, table: CoefficientTable | None = None) -> Fraction:
    """Coefficient a_k of the expansion of pi G_{n-1} in powers of 1/(16 n)."""
    if k < 1:
        raise ValueError(f"granath_a requires k >= 1, got {k}")
    table = table or default_table
    acc = Fraction(-1, k)
    for s in range(1, k + 1):
        b = table.beta(s)
        if b:
            acc += Fraction(factorial(k - 1) * 4**s, factorial(s - 1) * factorial(k - s)) * b
    return 4**k * acc

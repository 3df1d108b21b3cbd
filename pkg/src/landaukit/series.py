"""Truncated power series with exact rational coefficients.

Provides an independent route to rho_k: they are the Maclaurin coefficients of

    u(x) = F(1/4, 1/4; 1; sin^2(x/2)) * (x/2) / sin(x/2),

which is assembled here formally (no numerics, no convergence questions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial


@dataclass(frozen=True)
class TruncSeries:
    """sum_{m=0}^{order} coeffs[m] x^m, arithmetic exact modulo x^(order+1)."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")

    @classmethod
    def constant(cls, c, order: int) -> TruncSeries:
        return cls((c,) + (0,) * order)

    @classmethod
    def monomial(cls, power: int, order: int, c=1) -> TruncSeries:
        coeffs = [0] * (order + 1)
        if power <= order:
            coeffs[power] = c
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int) -> Fraction:
        return self.coeffs[m]

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check(self, other: TruncSeries) -> None:
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        return TruncSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        return TruncSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> TruncSeries:
        return TruncSeries(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return TruncSeries(a * Fraction(other) for a in self.coeffs)

    __rmul__ = __mul__

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: order + 1])


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated at the common order."""
    a._check(b)
    M = a.order
    ac, bc = a.coeffs, b.coeffs
    out = []
    for m in range(M + 1):
        acc = Fraction(0)
        for i in range(m + 1):
            if ac[i] and bc[m - i]:
                acc += ac[i] * bc[m - i]
        out.append(acc)
    return TruncSeries(out)


def series_reciprocal(a: TruncSeries) -> TruncSeries:
    """b with a * b = 1 mod x^(order+1)."""
    a0 = a[0]
    if a0 == 0:
        raise ZeroDivisionError("series with zero constant term has no reciprocal")
    out = [1 / a0]
    for m in range(1, a.order + 1):
        acc = sum((a[i] * out[m - i] for i in range(1, m + 1) if a[i]), Fraction(0))
        out.append(-acc / a0)
    return TruncSeries(out)


def compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """outer(inner(x)) for inner with zero constant term, by Horner's rule.

    Only powers inner^m with m <= inner.order contribute, so outer may be
    given to any order; extra terms are ignored.
    """
    if inner[0] != 0:
        raise ValueError("inner series must have zero constant term")
    M = inner.order
    top = min(outer.order, M)
    result = TruncSeries.constant(outer[top], M)
    for m in range(top - 1, -1, -1):
        result = series_mul(result, inner) + TruncSeries.constant(outer[m], M)
    return result


def sin_sq_series(M: int, scale=Fraction(1, 2)) -> TruncSeries:
    """sin^2(scale * x) to order M, using sin^2 y = (1 - cos 2y) / 2."""
    if M < 0:
        raise ValueError("order must be nonnegative")
    two_a = 2 * Fraction(scale)
    coeffs = [Fraction(0)] * (M + 1)
    for j in range(1, M // 2 + 1):
        sign = 1 if j % 2 else -1
        coeffs[2 * j] = sign * two_a ** (2 * j) / (2 * factorial(2 * j))
    return TruncSeries(coeffs)


def sin_half_sq_series(M: int) -> TruncSeries:
    return sin_sq_series(M, Fraction(1, 2))


def sinc_half_series(M: int) -> TruncSeries:
    """sin(x/2) / (x/2) to order M."""
    coeffs = [Fraction(0)] * (M + 1)
    for j in range(M // 2 + 1):
        sign = 1 if j % 2 == 0 else -1
        coeffs[2 * j] = Fraction(sign, 4**j * factorial(2 * j + 1))
    return TruncSeries(coeffs)


def hyp_series(a, b, c, M: int) -> TruncSeries:
    """Maclaurin series of the Gauss function F(a, b; c; t) in t to order M."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c.denominator == 1 and c <= 0:
        raise ValueError(f"F(a, b; c; t) undefined for c = {c}")
    coeffs = [Fraction(1)]
    for m in range(M):
        coeffs.append(coeffs[-1] * (a + m) * (b + m) / ((c + m) * (m + 1)))
    return TruncSeries(coeffs)


def u_series(M: int) -> TruncSeries:
    """Exact series of F(1/4, 1/4; 1; sin^2(x/2)) * (x/2)/sin(x/2) to order M."""
    if M < 0:
        raise ValueError("order must be nonnegative")
    hyp = hyp_series(Fraction(1, 4), Fraction(1, 4), 1, M // 2)
    inner = compose(hyp, sin_half_sq_series(M))
    return series_mul(inner, series_reciprocal(sinc_half_series(M)))


def rho_from_series(k: int) -> Fraction:
    """rho_k read off as the x^(2k) coefficient of u."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return u_series(2 * k)[2 * k]


def rho_series_table(k_max: int) -> list[Fraction]:
    """[rho_0, ..., rho_{k_max}] from a single series expansion."""
    u = u_series(2 * k_max)
    return [u[2 * k] for k in range(k_max + 1)]

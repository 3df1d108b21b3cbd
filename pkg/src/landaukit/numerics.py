"""Exact rationals and rigorous midpoint-radius (ball) arithmetic.

Rationals are :class:`fractions.Fraction`, which is already kept in lowest
terms with a positive denominator after every operation.

A :class:`Ball` stores a dyadic midpoint ``man * 2**exp`` rounded to ``prec``
bits and a dyadic radius rounded *up* to a short mantissa.  Every operation
returns a ball guaranteed to contain the exact result of the operation applied
to any points of the operand balls.  The transcendental constants are computed
with integer fixed-point arithmetic and explicit error accounting, so every
radius is a proved bound rather than an estimate.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

# radius mantissa width; radii only need a few significant bits
_RAD_BITS = 30


def factorial(n: int) -> int:
    """Return ``n!`` exactly."""
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return math.factorial(n)


def _pow2(e: int) -> Fraction:
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)


def _round_div(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties away from zero."""
    q, r = divmod(abs(num), den)
    if 2 * r >= den:
        q += 1
    return q if num >= 0 else -q


def _rational_to_dyadic(q: Fraction, prec: int) -> tuple[int, int, bool]:
    """Round ``q`` to ``prec`` significant bits: returns (man, exp, inexact).

    The rounding error is at most ``2**(exp - 1)``.
    """
    num, den = q.numerator, q.denominator
    if num == 0:
        return 0, 0, False
    if den & (den - 1) == 0 and abs(num).bit_length() <= prec:
        return num, -(den.bit_length() - 1), False
    exp = abs(num).bit_length() - den.bit_length() - prec
    if exp >= 0:
        man = _round_div(num, den << exp)
        exact = man * (den << exp) == num
    else:
        man = _round_div(num << -exp, den)
        exact = man * den == num << -exp
    return man, exp, not exact


def _radius_up(r: Fraction) -> Fraction:
    """Smallest-ish dyadic >= r with a short mantissa."""
    if r <= 0:
        return Fraction(0)
    num, den = r.numerator, r.denominator
    if den & (den - 1) == 0 and num.bit_length() <= _RAD_BITS:
        return r
    exp = num.bit_length() - den.bit_length() - _RAD_BITS
    if exp >= 0:
        man = -(-num // (den << exp))
    else:
        man = -(-(num << -exp) // den)
    return man * _pow2(exp)


class Ordering(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    UNKNOWN = "unknown"


class Ball:
    """Closed real interval ``[mid - rad, mid + rad]`` with a ``prec``-bit midpoint."""

    __slots__ = ("man", "exp", "rad", "prec")

    def __init__(self, man: int, exp: int, rad: Fraction, prec: int):
        if rad < 0:
            raise ValueError("negative radius")
        self.man = man
        self.exp = exp
        self.rad = rad
        self.prec = prec

    # construction -----------------------------------------------------

    @classmethod
    def from_rational(cls, q, prec: int, rad=0) -> Ball:
        """Ball containing the exact rational ``q`` widened by ``rad``.

        The midpoint is ``q`` rounded to ``prec`` bits; the radius absorbs the
        rounding error (one ulp when inexact).
        """
        q = Fraction(q)
        man, exp, inexact = _rational_to_dyadic(q, prec)
        extra = _pow2(exp) if inexact else Fraction(0)
        return cls(man, exp, _radius_up(Fraction(rad) + extra), prec)

    @classmethod
    def from_interval(cls, lo, hi, prec: int) -> Ball:
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError("empty interval")
        return cls.from_rational((lo + hi) / 2, prec, (hi - lo) / 2)

    # accessors --------------------------------------------------------

    @property
    def mid(self) -> Fraction:
        return self.man * _pow2(self.exp)

    def lower(self) -> Fraction:
        return self.mid - self.rad

    def upper(self) -> Fraction:
        return self.mid + self.rad

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lower() <= x <= self.upper()

    def mag(self) -> Fraction:
        """Upper bound on ``|x|`` over the ball."""
        return abs(self.mid) + self.rad

    def is_exact(self) -> bool:
        return self.rad == 0

    def __float__(self) -> float:
        return float(self.mid)

    def __repr__(self) -> str:
        return f"Ball({float(self.mid)!r} +/- {float(self.rad):.3e}, prec={self.prec})"

    # arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Ball):
            return other
        if isinstance(other, (int, _RationalABC)):
            return None
        return NotImplemented

    def _result(self, exact_mid: Fraction, rad: Fraction, prec: int) -> Ball:
        return Ball.from_rational(exact_mid, prec, rad)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o is None:
            return self._result(self.mid + Fraction(other), self.rad, self.prec)
        prec = min(self.prec, o.prec)
        return self._result(self.mid + o.mid, self.rad + o.rad, prec)

    __radd__ = __add__

    def __neg__(self) -> Ball:
        return Ball(-self.man, self.exp, self.rad, self.prec)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o is None:
            return self._result(self.mid - Fraction(other), self.rad, self.prec)
        prec = min(self.prec, o.prec)
        return self._result(self.mid - o.mid, self.rad + o.rad, prec)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o is None:
            q = Fraction(other)
            return self._result(self.mid * q, self.rad * abs(q), self.prec)
        prec = min(self.prec, o.prec)
        a, b = self.mid, o.mid
        rad = abs(a) * o.rad + abs(b) * self.rad + self.rad * o.rad
        return self._result(a * b, rad, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o is None:
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("ball division by zero")
            return self._result(self.mid / q, self.rad / abs(q), self.prec)
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.reciprocal() * Fraction(other)

    def reciprocal(self) -> Ball:
        """1/x; the ball must exclude zero."""
        m = self.mid
        low = abs(m) - self.rad
        if low <= 0:
            raise ZeroDivisionError("ball contains zero")
        # |1/x - 1/m| <= r / (|m| (|m| - r)) for |x - m| <= r
        return self._result(1 / m, self.rad / (abs(m) * low), self.prec)

    def __pow__(self, k: int) -> Ball:
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Ball.from_rational(1, self.prec)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def sqrt(self) -> Ball:
        lo = self.lower()
        if lo < 0:
            raise ValueError("sqrt of a ball reaching below zero")
        w = self.prec + 8
        return Ball.from_interval(
            _sqrt_floor(lo, w), _sqrt_ceil(self.upper(), w), self.prec
        )

    def log(self) -> Ball:
        """Natural log of a positive ball (log is monotone, so use the endpoints)."""
        lo, hi = self.lower(), self.upper()
        if lo <= 0:
            raise ValueError("log of a ball reaching zero or below")
        if lo == hi:
            return const_log(lo, self.prec)
        w = self.prec + 8
        return Ball.from_interval(
            const_log(lo, w).lower(), const_log(hi, w).upper(), self.prec
        )


def _sqrt_floor(q: Fraction, w: int) -> Fraction:
    # s = isqrt(floor(q * 4**w)) satisfies s <= sqrt(q) * 2**w
    s = math.isqrt((q.numerator << (2 * w)) // q.denominator)
    return Fraction(s, 1 << w)


def _sqrt_ceil(q: Fraction, w: int) -> Fraction:
    return _sqrt_floor(q, w) + Fraction(1, 1 << w)


def ball_from_rational(q, p: int) -> Ball:
    return Ball.from_rational(q, p)


def cmp_strict(a, b) -> Ordering:
    """Decide a < b or a > b from enclosures; UNKNOWN when they overlap.

    Either side may be a :class:`Ball` or an exact rational.
    """
    a_lo, a_hi = _bounds(a)
    b_lo, b_hi = _bounds(b)
    if a_hi < b_lo:
        return Ordering.LESS
    if a_lo > b_hi:
        return Ordering.GREATER
    return Ordering.UNKNOWN


def _bounds(x) -> tuple[Fraction, Fraction]:
    if isinstance(x, Ball):
        return x.lower(), x.upper()
    x = Fraction(x)
    return x, x


@dataclass(frozen=True)
class PrecisionPolicy:
    start_bits: int = 128
    max_bits: int = 8192
    growth: int = 2

    def __post_init__(self):
        if self.start_bits < 2 or self.start_bits > self.max_bits:
            raise ValueError("need 2 <= start_bits <= max_bits")
        if self.growth < 2:
            raise ValueError("growth factor must be at least 2")

    def schedule(self):
        """Yield the working precisions start, start*g, ... capped at max."""
        p = self.start_bits
        while True:
            yield p
            if p >= self.max_bits:
                return
            p = min(p * self.growth, self.max_bits)


# ---------------------------------------------------------------------------
# constants
#
# Fixed-point routines work with integers scaled by 2**w.  Each floor division
# contributes at most one unit in the last place (ulp); the error counts below
# are upper bounds in ulps of 2**-w.


def _guard(p: int) -> int:
    return p + 16 + p.bit_length()


def _atan_inv_fixed(x: int, w: int) -> tuple[int, int]:
    """atan(1/x) * 2**w for integer x >= 2, with an error bound in ulps."""
    x2 = x * x
    power = (1 << w) // x  # ~ 2**w / x**(2k+1), error < 2 throughout
    total = 0
    k = 0
    while power:
        term = power // (2 * k + 1)
        total += -term if k & 1 else term
        power //= x2
        k += 1
    # per-term error < 3; alternating tail below the first vanished power < 2
    return total, 3 * k + 2


def _atanh_fixed(a: int, b: int, w: int) -> tuple[int, int]:
    """atanh(a/b) * 2**w for 0 <= a/b <= 1/3, with an error bound in ulps."""
    a2, b2 = a * a, b * b
    power = (a << w) // b
    total = 0
    k = 0
    while power:
        total += power // (2 * k + 1)
        power = power * a2 // b2
        k += 1
    # power error < 1/(1 - 1/9) < 2, so each term is off by < 3; the
    # positive tail after power hits 0 is < 2 / (1 - 1/9) < 3
    return total, 3 * k + 3


@functools.lru_cache(maxsize=64)
def const_pi(p: int) -> Ball:
    """Ball containing pi, via Machin's formula 16 atan(1/5) - 4 atan(1/239)."""
    if p < 2:
        raise ValueError("precision must be at least 2 bits")
    w = _guard(p)
    a, ea = _atan_inv_fixed(5, w)
    b, eb = _atan_inv_fixed(239, w)
    err = 16 * ea + 4 * eb
    return Ball.from_rational(Fraction(16 * a - 4 * b, 1 << w), p, Fraction(err, 1 << w))


@functools.lru_cache(maxsize=64)
def _ln2_fixed(w: int) -> tuple[int, int]:
    v, e = _atanh_fixed(1, 3, w)
    return 2 * v, 2 * e


@functools.lru_cache(maxsize=64)
def const_ln2(p: int) -> Ball:
    w = _guard(p)
    v, e = _ln2_fixed(w)
    return Ball.from_rational(Fraction(v, 1 << w), p, Fraction(e, 1 << w))


def const_log(x, p: int) -> Ball:
    """Ball containing ln(x) for a positive rational x."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"log of nonpositive value {x}")
    if p < 2:
        raise ValueError("precision must be at least 2 bits")
    if x == 1:
        return Ball(0, 0, Fraction(0), p)
    return _const_log_cached(x.numerator, x.denominator, p)


@functools.lru_cache(maxsize=4096)
def _const_log_cached(num: int, den: int, p: int) -> Ball:
    # x = 2**k * y with y in [3/4, 3/2)
    k = num.bit_length() - den.bit_length()
    y = Fraction(num, den) / _pow2(k)
    while y >= Fraction(3, 2):
        y /= 2
        k += 1
    while y < Fraction(3, 4):
        y *= 2
        k -= 1
    w = _guard(p) + max(k.bit_length(), 1)
    z = (y - 1) / (y + 1)  # |z| <= 1/5
    v, e = _atanh_fixed(abs(z.numerator), z.denominator, w)
    if z < 0:
        v = -v
    total = 2 * v
    err = 2 * e
    if k:
        l2, el2 = _ln2_fixed(w)
        total += k * l2
        err += abs(k) * el2
    return Ball.from_rational(Fraction(total, 1 << w), p, Fraction(err, 1 << w))


@functools.lru_cache(maxsize=32)
def const_gamma(p: int) -> Ball:
    """Ball containing Euler's constant.

    Uses the Brent-McMillan identity

        gamma = U/V - ln n - K0(2n)/I0(2n),
        V = sum_k (n^k/k!)^2,  U = sum_k (n^k/k!)^2 H_k,

    with the bound 0 < K0(2n)/I0(2n) < pi e^(-4n) < 4 * 2^(-5n).  The sums are
    truncated at K >= 2n terms; beyond that the terms of V fall by at least 4x
    and those of U by at least 2x, which bounds the truncation error of U/V by
    B_K (H_K + U/V) / V.  U/V for the truncated sums is computed exactly.
    """
    if p < 2:
        raise ValueError("precision must be at least 2 bits")
    w = _guard(p)
    n = -(-(w + 4) // 5)
    n2 = n * n
    K = max(2 * n, (18 * n) // 5 + 8)
    while True:
        fK = math.factorial(K)
        b = fK * fK  # n^{2k} (K!/k!)^2 at k = 0
        kh = 0  # K! * H_k
        sb = b
        sa = 0
        for k in range(1, K + 1):
            b = b * n2 // (k * k)
            kh += fK // k
            sb += b
            sa += b * kh
        ratio = Fraction(sa, sb * fK)
        # truncation error <= (b_K / sb) * (H_K + ratio) <= (b_K / sb) * 2K
        trunc = Fraction(b * 2 * K, sb)
        if trunc <= Fraction(1, 1 << w):
            break
        K += n
    ln_n = const_log(n, w + 8)
    bessel = Fraction(4, 1 << (5 * n))
    core = ratio - ln_n.mid - bessel / 2
    rad = ln_n.rad + trunc + bessel / 2
    return Ball.from_rational(core, p, rad)


def format_decimal(q, digits: int, strip: bool = False) -> str:
    """Decimal string of the exact rational ``q`` correctly rounded to ``digits`` places."""
    q = Fraction(q)
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    scaled = round(q * 10**digits)  # round-half-even on an exact value
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    frac_s = str(frac).rjust(digits, "0")
    if strip:
        frac_s = frac_s.rstrip("0")
        if not frac_s:
            return f"{sign}{whole}" if whole or not sign else "0"
    return f"{sign}{whole}.{frac_s}"


def format_radius(r) -> str:
    """Scientific notation with 3 significant digits, rounded up so it stays a bound."""
    r = Fraction(r)
    if r <= 0:
        return "0"
    e = len(str(r.numerator)) - len(str(r.denominator))
    while r >= Fraction(10) ** e:
        e += 1
    while r < Fraction(10) ** (e - 1):
        e -= 1
    # now 10^(e-1) <= r < 10^e
    mant = math.ceil(r / Fraction(10) ** (e - 3))
    if mant == 1000:
        mant, e = 100, e + 1
    s = str(mant)
    return f"{s[0]}.{s[1:]}e{e - 1:+03d}"


def format_ball(b: Ball, digits: int = 20) -> str:
    return f"{format_decimal(b.mid, digits)} +/- {format_radius(b.rad)}"

"""Rigorous checkers for the truncation-error bounds and the related sign conditions.

Every floating comparison goes through :func:`cmp_strict` on ball enclosures,
so a point is reported PASS or FAIL only when the enclosures separate.  When
they do not, the working precision is escalated along a
:class:`PrecisionPolicy`; UNKNOWN is reported only after the cap is reached.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from .coefficients import CoefficientTable, default_table, granath_a, r_coeff
from .landau import LandauSequence, default_sequence
from .numerics import (
    Ball,
    Ordering,
    PrecisionPolicy,
    cmp_strict,
    const_gamma,
    const_ln2,
    const_log,
    const_pi,
    format_ball,
    format_decimal,
)

# slack in the rho_k sandwich constants
RHO_DELTA_BOUND = Fraction(10259, 10000)

DEFAULT_POLICY = PrecisionPolicy()


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CheckResult:
    point: tuple
    status: Status
    precision_used: int
    witness: str

    def to_dict(self) -> dict:
        return {
            "point": list(self.point),
            "status": self.status.value,
            "precision": self.precision_used,
            "witness": self.witness,
        }


@dataclass
class VerificationReport:
    check_name: str
    ranges: dict
    results: list
    policy: PrecisionPolicy | None = None
    conjecture: bool = False
    table: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = {s.value: 0 for s in Status}
        for r in self.results:
            counts[r.status.value] += 1
        counts["total"] = len(self.results)
        return counts

    @property
    def ok(self) -> bool:
        s = self.summary
        return s["fail"] == 0 and s["unknown"] == 0

    def failures(self) -> list:
        return [r for r in self.results if r.status is not Status.PASS]

    def to_dict(self) -> dict:
        out = {
            "check": self.check_name,
            "conjecture": self.conjecture,
            "ranges": dict(self.ranges),
            "policy": None
            if self.policy is None
            else {
                "start_bits": self.policy.start_bits,
                "max_bits": self.policy.max_bits,
                "growth": self.policy.growth,
            },
            "summary": self.summary,
            "results": [r.to_dict() for r in self.results],
        }
        if self.table:
            out["table"] = self.table
        return out


def _decide(probe: Callable[[int], tuple], point: tuple, policy: PrecisionPolicy) -> CheckResult:
    """Run ``probe(p) -> (Status, witness)`` at increasing precision until decided."""
    status, witness, p = Status.UNKNOWN, "", policy.start_bits
    for p in policy.schedule():
        status, witness = probe(p)
        if status is not Status.UNKNOWN:
            break
    return CheckResult(point, status, p, witness)


def _status(order: Ordering, want: Ordering) -> Status:
    if order is Ordering.UNKNOWN:
        return Status.UNKNOWN
    return Status.PASS if order is want else Status.FAIL


def _all_of(*statuses: Status) -> Status:
    if Status.FAIL in statuses:
        return Status.FAIL
    if Status.UNKNOWN in statuses:
        return Status.UNKNOWN
    return Status.PASS


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# ---------------------------------------------------------------------------
# truncation error of the n + 3/4 expansion


class EpsilonEvaluator:
    """Caches the pieces of eps_l(N) = pi G_n - ln N - gamma - 4 ln 2 - sum_{s<l} beta_{2s}/N^{2s}.

    The transcendental part ``pi G_n - ln N - gamma - 4 ln 2`` is enclosed once
    per (n, precision); the partial sums are exact rationals.
    """

    def __init__(self, table: CoefficientTable | None = None, sequence: LandauSequence | None = None):
        self.table = table or default_table
        self.sequence = sequence or default_sequence
        self._base = {}
        self._sums = {}
        self._lock = threading.Lock()

    @staticmethod
    def N(n: int) -> Fraction:
        return n + Fraction(3, 4)

    def base(self, n: int, p: int) -> Ball:
        key = (n, p)
        b = self._base.get(key)
        if b is None:
            w = p + 8
            logs = const_log(self.N(n), w) + const_gamma(w) + 4 * const_ln2(w)
            b = const_pi(w) * self.sequence[n] - logs
            b = Ball.from_rational(b.mid, p, b.rad)
            with self._lock:
                self._base[key] = b
        return b

    def partial_sum(self, n: int, l: int) -> Fraction:
        """sum_{s=1}^{l-1} beta_{2s} / N^{2s}."""
        with self._lock:
            sums = self._sums.setdefault(n, [Fraction(0)])
            N2 = self.N(n) ** 2
            while len(sums) < l:
                s = len(sums)
                sums.append(sums[-1] + self.table.beta(2 * s) / N2**s)
            return sums[l - 1]

    def term(self, n: int, l: int) -> Fraction:
        """The first neglected term beta_{2l} / N^{2l}."""
        return self.table.beta(2 * l) / self.N(n) ** (2 * l)

    def epsilon(self, n: int, l: int, p: int) -> Ball:
        if n < 0 or l < 1:
            raise ValueError("need n >= 0 and l >= 1")
        return self.base(n, p) - self.partial_sum(n, l)


default_evaluator = EpsilonEvaluator()


def eval_epsilon(n: int, l: int, p: int) -> Ball:
    """Ball enclosing the truncation error eps_l(N), N = n + 3/4."""
    return default_evaluator.epsilon(n, l, p)


def check_thm1(n_max: int = 1000, l_max: int = 20, policy: PrecisionPolicy = DEFAULT_POLICY,
               *, n_min: int = 0, l_min: int = 1, evaluator: EpsilonEvaluator | None = None) -> VerificationReport:
    """(-1)^(l+1) eps_l(N) > 0 on the grid n_min..n_max x l_min..l_max."""
    ev = evaluator or default_evaluator
    results = []
    for n in range(n_min, n_max + 1):
        for l in range(l_min, l_max + 1):
            def probe(p, n=n, l=l):
                e = _sign(l + 1) * ev.epsilon(n, l, p)
                return _status(cmp_strict(e, 0), Ordering.GREATER), format_ball(e, 6)
            results.append(_decide(probe, (n, l), policy))
    return VerificationReport("thm1", {"n": [n_min, n_max], "l": [l_min, l_max]}, results, policy)


def check_thm2(n_max: int = 1000, l_max: int = 20, policy: PrecisionPolicy = DEFAULT_POLICY,
               *, n_min: int = 0, l_min: int = 1, evaluator: EpsilonEvaluator | None = None) -> VerificationReport:
    """0 < (-1)^(l+1) eps_l(N) < (-1)^(l+1) beta_{2l} / N^(2l)."""
    ev = evaluator or default_evaluator
    results = []
    for n in range(n_min, n_max + 1):
        for l in range(l_min, l_max + 1):
            bound = _sign(l + 1) * ev.term(n, l)

            def probe(p, n=n, l=l, bound=bound):
                e = _sign(l + 1) * ev.epsilon(n, l, p)
                st = _all_of(
                    _status(cmp_strict(e, 0), Ordering.GREATER),
                    _status(cmp_strict(e, bound), Ordering.LESS),
                )
                ratio = format_decimal(e.mid / bound, 6)
                return st, f"{format_ball(e, 6)}; eps/term ~ {ratio}"
            results.append(_decide(probe, (n, l), policy))
    return VerificationReport("thm2", {"n": [n_min, n_max], "l": [l_min, l_max]}, results, policy)


def check_thm3(n_max: int = 1000, m_max: int = 10, k_max: int = 10, policy: PrecisionPolicy = DEFAULT_POLICY,
               *, n_min: int = 0, evaluator: EpsilonEvaluator | None = None) -> VerificationReport:
    """Two-sided bounds on pi G_n by partial sums ending at beta_{4m} (below) and beta_{4k-2} (above).

    The sandwich for a triple (n, m, k) holds iff both its sides hold, so each
    side is reported separately: point (n, "lower", m) and (n, "upper", k).
    """
    ev = evaluator or default_evaluator
    results = []
    for n in range(n_min, n_max + 1):
        for m in range(1, m_max + 1):
            # pi G_n - (ln N + gamma + 4 ln 2 + sum_{s <= 2m}) = eps_{2m+1}
            def probe(p, n=n, m=m):
                gap = ev.epsilon(n, 2 * m + 1, p)
                return _status(cmp_strict(gap, 0), Ordering.GREATER), format_ball(gap, 6)
            results.append(_decide(probe, (n, "lower", m), policy))
        for k in range(1, k_max + 1):
            def probe(p, n=n, k=k):
                gap = ev.epsilon(n, 2 * k, p)
                return _status(cmp_strict(gap, 0), Ordering.LESS), format_ball(gap, 6)
            results.append(_decide(probe, (n, "upper", k), policy))
    ranges = {"n": [n_min, n_max], "m": [1, m_max], "k": [1, k_max]}
    return VerificationReport("thm3", ranges, results, policy)


# ---------------------------------------------------------------------------
# coefficient lemmas


def lemma22_bound(p: int) -> Ball:
    return const_pi(p) ** 2 * Fraction(44, 9)


def check_lemma22(k_max: int = 50, policy: PrecisionPolicy = DEFAULT_POLICY,
                  table: CoefficientTable | None = None) -> VerificationReport:
    """rho_k / rho_{k+1} < 44 pi^2 / 9 for 0 <= k <= k_max, with the ratio table."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    table = table or default_table
    results, rows = [], []
    for k in range(k_max + 1):
        ratio = table.rho(k) / table.rho(k + 1)
        rows.append({"k": k, "ratio": format_decimal(ratio, 2),
                     "numerator": str(ratio.numerator), "denominator": str(ratio.denominator)})

        def probe(p, ratio=ratio):
            bound = lemma22_bound(p)
            st = _status(cmp_strict(ratio, bound), Ordering.LESS)
            return st, f"{format_decimal(ratio, 2)} vs {format_decimal(bound.mid, 2)}"
        results.append(_decide(probe, (k,), policy))
    return VerificationReport("lemma22", {"k": [0, k_max]}, results, policy, table=rows)


def check_lemma23(l_max: int = 20, s_span: int = 100,
                  table: CoefficientTable | None = None) -> VerificationReport:
    """Exact sign test (-1)^(l+1) r_{l,s} > 0 for l <= l_max, l+1 <= s <= l+s_span."""
    if l_max < 1 or s_span < 1:
        raise ValueError("need l_max >= 1 and s_span >= 1")
    results = []
    for l in range(1, l_max + 1):
        for s in range(l + 1, l + s_span + 1):
            r = _sign(l + 1) * r_coeff(l, s, table)
            st = Status.PASS if r > 0 else Status.FAIL
            results.append(CheckResult((l, s), st, 0, f"{float(r):.6e}"))
    return VerificationReport("lemma23", {"l": [1, l_max], "s_span": s_span}, results)


def rho_sandwich_constants(p: int) -> tuple[Ball, Ball]:
    """16 ln 2 - 4 gamma - 4 ln(2 pi) -/+ 1.0259 as balls."""
    ln2 = const_ln2(p)
    centre = 16 * ln2 - 4 * const_gamma(p) - 4 * (ln2 + const_pi(p).log())
    return centre - RHO_DELTA_BOUND, centre + RHO_DELTA_BOUND


def rho_scaled_offset(k: int, p: int, table: CoefficientTable | None = None) -> Ball:
    """(pi / sqrt 2) rho_k (2 pi)^(2k) - 4 ln(2k)."""
    table = table or default_table
    pi = const_pi(p)
    scaled = pi / Ball.from_rational(2, p).sqrt() * table.rho(k) * (2 * pi) ** (2 * k)
    return scaled - 4 * const_log(2 * k, p)


def check_rho_sandwich(k_min: int = 10, k_max: int = 50, policy: PrecisionPolicy = DEFAULT_POLICY,
                       table: CoefficientTable | None = None) -> VerificationReport:
    """(4 ln 2k + C_lo) / (2 pi)^(2k) <= (pi/sqrt 2) rho_k <= (4 ln 2k + C_hi) / (2 pi)^(2k).

    Both sides are multiplied through by (2 pi)^(2k) > 0 before comparing.
    """
    if k_min < 10:
        raise ValueError("the rho_k sandwich is only claimed for k >= 10")
    results = []
    for k in range(k_min, k_max + 1):
        def probe(p, k=k):
            lo, hi = rho_sandwich_constants(p)
            v = rho_scaled_offset(k, p, table)
            st = _all_of(
                _status(cmp_strict(v, lo), Ordering.GREATER),
                _status(cmp_strict(v, hi), Ordering.LESS),
            )
            return st, (f"offset {format_ball(v, 6)} in "
                        f"[{format_decimal(lo.mid, 6)}, {format_decimal(hi.mid, 6)}]?")
        results.append(_decide(probe, (k,), policy))
    return VerificationReport("rho-sandwich", {"k": [k_min, k_max]}, results, policy)


# ---------------------------------------------------------------------------
# bounds stated in terms of n rather than N


def _shifted_base(n: int, p: int, sequence: LandauSequence) -> Ball:
    """pi G_{n-1} - ln(16 n) - gamma."""
    w = p + 8
    b = const_pi(w) * sequence[n - 1] - const_log(16 * n, w) - const_gamma(w)
    return Ball.from_rational(b.mid, p, b.rad)


def check_classical(n_max: int = 1000, policy: PrecisionPolicy = DEFAULT_POLICY,
                    sequence: LandauSequence | None = None) -> VerificationReport:
    """ln(16n) + gamma - 1/(4n) + 5/(192 n^2) < pi G_{n-1} < same + 3/(128 n^3)."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    sequence = sequence or default_sequence
    results = []
    for n in range(1, n_max + 1):
        lo = Fraction(-1, 4 * n) + Fraction(5, 192 * n * n)
        hi = lo + Fraction(3, 128 * n**3)

        def probe(p, n=n, lo=lo, hi=hi):
            d = _shifted_base(n, p, sequence)
            st = _all_of(
                _status(cmp_strict(d, lo), Ordering.GREATER),
                _status(cmp_strict(d, hi), Ordering.LESS),
            )
            return st, format_ball(d - lo, 6)
        results.append(_decide(probe, (n,), policy))
    return VerificationReport("classical", {"n": [1, n_max]}, results, policy)


def check_granath(m_max: int = 12, n_max: int = 500, policy: PrecisionPolicy = DEFAULT_POLICY,
                  sequence: LandauSequence | None = None,
                  table: CoefficientTable | None = None) -> VerificationReport:
    """Conjectured signs (-1)^(m(m+1)/2) (pi G_{n-1} - A_m(n)) < 0.

    Reported as a conjecture: a FAIL here is a finding, not a defect.
    """
    if m_max < 0 or n_max < 1:
        raise ValueError("need m_max >= 0 and n_max >= 1")
    sequence = sequence or default_sequence
    a = [granath_a(k, table) for k in range(1, m_max + 1)]
    results = []
    for n in range(1, n_max + 1):
        x = Fraction(1, 16 * n)
        partial = [Fraction(0)]
        for k in range(1, m_max + 1):
            partial.append(partial[-1] + a[k - 1] * x**k)
        for m in range(m_max + 1):
            sign = _sign(m * (m + 1) // 2)

            def probe(p, n=n, m=m, sign=sign):
                diff = sign * (_shifted_base(n, p, sequence) - partial[m])
                return _status(cmp_strict(diff, 0), Ordering.LESS), format_ball(diff, 6)
            results.append(_decide(probe, (m, n), policy))
    results.sort(key=lambda r: r.point)
    return VerificationReport("granath", {"m": [0, m_max], "n": [1, n_max]}, results, policy,
                              conjecture=True)


# ---------------------------------------------------------------------------
# data tables


@dataclass(frozen=True)
class RatioRow:
    n: int
    N: Fraction
    ratio: Ball
    status: Status


def figure1_data(l: int, n_max: int, policy: PrecisionPolicy = DEFAULT_POLICY,
                 evaluator: EpsilonEvaluator | None = None) -> list:
    """eps_l(N) / (beta_{2l} / N^(2l)) for n = 0..n_max, each decided inside (0, 1) or not."""
    if l < 1:
        raise ValueError("l must be at least 1")
    ev = evaluator or default_evaluator
    rows = []
    for n in range(n_max + 1):
        term = ev.term(n, l)
        ratio, status = None, Status.UNKNOWN
        for p in policy.schedule():
            ratio = ev.epsilon(n, l, p) / term
            status = _all_of(
                _status(cmp_strict(ratio, 0), Ordering.GREATER),
                _status(cmp_strict(ratio, 1), Ordering.LESS),
            )
            if status is not Status.UNKNOWN:
                break
        rows.append(RatioRow(n, ev.N(n), ratio, status))
    return rows


def check_figure1(l: int, n_max: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> VerificationReport:
    rows = figure1_data(l, n_max, policy)
    results = [CheckResult((l, r.n), r.status, r.ratio.prec, format_ball(r.ratio, 6)) for r in rows]
    return VerificationReport("figure1", {"l": l, "n": [0, n_max]}, results, policy)


def beta_growth_report(l_min: int = 2, l_max: int = 50, p: int = 256,
                       table: CoefficientTable | None = None) -> list:
    """Rows (l, ball) of pi (2 pi)^(2l) |beta_{2l}| / ((2l-1)! 4 sqrt 2 ln 2l).

    Exploratory: tracks how |beta_{2l}| compares with its leading-order growth
    model; it carries no pass/fail.
    """
    if l_min < 2:
        raise ValueError("l_min must be at least 2")
    table = table or default_table
    pi = const_pi(p)
    sqrt2 = Ball.from_rational(2, p).sqrt()
    rows = []
    for l in range(l_min, l_max + 1):
        num = pi * (2 * pi) ** (2 * l) * abs(table.beta(2 * l))
        den = 4 * sqrt2 * const_log(2 * l, p) * factorial(2 * l - 1)
        rows.append((l, num / den))
    return rows

"""Landau constants G_n as exact rationals, and the difference equations they satisfy."""

from __future__ import annotations

import threading
from fractions import Fraction


class LandauSequence:
    """Lazily extended prefix G_0, G_1, ... ; G_{-1} = 0 by convention.

    Terms follow t_m = t_{m-1} * ((2m - 1) / (2m))^2 with t_0 = 1, so no large
    factorial quotients are ever formed.
    """

    def __init__(self):
        self._values = [Fraction(1)]
        self._term = Fraction(1)
        self._lock = threading.Lock()

    def _extend(self, n: int) -> None:
        with self._lock:
            term = self._term
            for m in range(len(self._values), n + 1):
                term = term * Fraction(2 * m - 1, 2 * m) ** 2
                self._values.append(self._values[-1] + term)
            self._term = term

    def __getitem__(self, n: int) -> Fraction:
        if n == -1:
            return Fraction(0)
        if n < -1:
            raise IndexError(f"G_{n} is not defined")
        if n >= len(self._values):
            self._extend(n)
        return self._values[n]

    def __len__(self) -> int:
        return len(self._values)


default_sequence = LandauSequence()


def landau_exact(n: int) -> Fraction:
    """G_n = sum_{m=0}^{n} ((2m-1)!! / (2m)!!)^2 exactly."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return default_sequence[n]


def diffeq_residual(n: int) -> Fraction:
    """(G_{n+1} - G_n) - ((2n+1)/(2n+2))^2 (G_n - G_{n-1}); identically zero."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    G = default_sequence
    return (G[n + 1] - G[n]) - Fraction(2 * n + 1, 2 * n + 2) ** 2 * (G[n] - G[n - 1])


def symmetric_residual(n: int) -> Fraction:
    """Residual of the symmetric form in N = n + 3/4; identically zero."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    G = default_sequence
    N = n + Fraction(3, 4)
    q = 1 / (4 * N)
    return (1 + q) ** 2 * G[n + 1] - (2 + 2 * q * q) * G[n] + (1 - q) ** 2 * G[n - 1]

#!/usr/bin/env python
"""The expansion coefficients beta_2k, computed three unrelated ways.

Run:  python demos/three_routes_to_beta.py
"""

from math import factorial

from landaukit import CoefficientTable, beta_det, rho_series_table

K = 12

# the bottom-up recurrence is the fast path; everything else checks it
table = CoefficientTable()
recurrence = [table.beta(2 * k) for k in range(1, K + 1)]

# a Hessenberg determinant gives each coefficient on its own, no earlier values needed
determinant = [beta_det(2 * k) for k in range(1, K + 1)]

# and a formal power series: rho_k is the x^2k coefficient of
# F(1/4,1/4;1;sin^2(x/2)) * (x/2)/sin(x/2), with beta_2k = (-1)^(k+1) (2k-1)! rho_k
rho = rho_series_table(K)
series = [(-1) ** (k + 1) * factorial(2 * k - 1) * rho[k] for k in range(1, K + 1)]

for k, (a, b, c) in enumerate(zip(recurrence, determinant, series), start=1):
    mark = "ok" if a == b == c else "MISMATCH"
    print(f"beta_{2 * k:<3d} {float(a):+.6e}   {mark}   {a}")

# consecutive rho ratios creep up towards 4 pi^2 = 39.48
print()
print("rho_k / rho_(k+1):", ", ".join(f"{float(rho[k] / rho[k + 1]):.2f}" for k in range(K)))

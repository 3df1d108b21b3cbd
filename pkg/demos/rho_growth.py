#!/usr/bin/env python
"""Large-k behaviour of rho_k, and a two-sided estimate that does not hold.

The estimate claims (pi/sqrt2) rho_k (2 pi)^2k - 4 ln 2k stays within
16 ln2 - 4 gamma - 4 ln 2pi -/+ 1.0259, i.e. inside [0.4041, 2.4559], for k >= 10.
The computed offset leaves that window at k = 13 and keeps falling.  What
fits the numbers is rho_k (2 pi)^2k ~ (4 ln 2k + 4 gamma + 16 ln 2 - 4 ln 2pi) / pi,
without the sqrt 2 and with the opposite sign on gamma.

Run:  python demos/rho_growth.py
"""

import math

from landaukit import const_pi, rho
from landaukit.verify import beta_growth_report, rho_sandwich_constants, rho_scaled_offset

lo, hi = rho_sandwich_constants(128)
print(f"claimed window for the offset: [{float(lo.mid):.6f}, {float(hi.mid):.6f}]")

g = 0.5772156649015329
c = 4 * g + 16 * math.log(2) - 4 * math.log(2 * math.pi)
print(f"\n  k   offset      in window   pi rho_k (2pi)^2k - 4 ln 2k   (limit {c:.4f})")
pi = const_pi(256)
for k in (10, 12, 13, 15, 20, 30, 40, 50, 80):
    off = float(rho_scaled_offset(k, 256).mid)
    inside = float(lo.mid) <= off <= float(hi.mid)
    plain = float((pi * rho(k) * (2 * pi) ** (2 * k)).mid) - 4 * math.log(2 * k)
    print(f"{k:4d}  {off:+.5f}    {str(inside):5s}       {plain:.5f}")

# the same sqrt2 shows up in the growth model for |beta_2l|: the ratio drifts to 1/sqrt2
print("\ngrowth-model ratio (tends to 0.7071, not 1):")
for l, b in beta_growth_report(10, 60):
    if l % 10 == 0:
        print(f"  l={l:3d}  {float(b.mid):.4f}")

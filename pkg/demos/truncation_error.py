#!/usr/bin/env python
"""How the truncated expansion of pi*G_n misses, and by how much.

With N = n + 3/4 the error after l terms, eps_l(N), has the sign of the first
omitted term and is smaller than it.  Here we look at the ratio
eps_l(N) / (beta_2l / N^2l), which should stay inside (0, 1).

Run:  python demos/truncation_error.py
"""

from landaukit.numerics import format_ball
from landaukit.verify import eval_epsilon, figure1_data

print("first few errors at n = 0 (N = 3/4), 128-bit balls")
for l in range(1, 6):
    print(f"  eps_{l} = {format_ball(eval_epsilon(0, l, 128), 12)}")

for l, n_max in ((2, 30), (16, 50)):
    rows = figure1_data(l, n_max)
    print(f"\nl = {l}: ratio for n = 0..{n_max}")
    for r in rows[:: max(1, n_max // 10)]:
        # a crude sideways bar chart
        bar = "#" * int(40 * float(r.ratio.mid))
        print(f"  n={r.n:3d}  {float(r.ratio.mid):.6f}  {bar}")
    inside = sum(r.status.value == "pass" for r in rows)
    print(f"  {inside}/{len(rows)} enclosures strictly inside (0, 1)")

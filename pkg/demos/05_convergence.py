"""
Finite-size approach to the large-N limit
=========================================

The curve is built from the large-N limit of (1/N) d/dxi log h_N. Here the
exact finite-N value, from one extra row in the determinant, is compared
with that limit; the gap closes roughly like 1/N.
"""

import time

from arcticcurve import asymptotic_log_deriv, finite_log_deriv, params_from_phase, xi_max
from arcticcurve.precision import PrecisionContext

ctx = PrecisionContext(bits=256)
mp = ctx.mp

p = params_from_phase(-3, 0.7, ctx)
xi = xi_max(p, ctx) / 2
limit = asymptotic_log_deriv(xi, p, ctx)
print("large-N value:", mp.nstr(limit, 20))
print("\n  N   finite-N value           error        N * error   seconds")
for n in (4, 8, 16, 32, 48):
    t0 = time.perf_counter()
    val = finite_log_deriv(n, p, xi, ctx)
    dt = time.perf_counter() - t0
    err = abs(val - limit)
    print(f"{n:3d}   {mp.nstr(val, 18):<22}  {mp.nstr(err, 4):<11}  {mp.nstr(n * err, 5):<10}  {dt:.2f}")

"""
Theta functions across the nome range
=====================================

In the anti-ferroelectric regime the nome is q = exp(-pi^2 / (2 eta)), so q
is tiny near Delta = -1 and creeps towards 1 as Delta -> -infinity. The
direct q-series converge slowly for q near 1; there the package switches to
the modular image. Both routes are compared here with mpmath's jtheta.
"""

import mpmath

from arcticcurve.params import params_from_phase
from arcticcurve.precision import PrecisionContext
from arcticcurve.specfun import elliptic_K, jacobi_sn, nome_af, theta_jet

ctx = PrecisionContext(bits=256)
mp = ctx.mp

for delta in (-1.01, -2, -100, -1e4, -1e8):
    eta = params_from_phase(delta, 1, ctx).eta
    print(f"Delta = {delta:>8g}   q = {mp.nstr(nome_af(eta, ctx), 8)}")

print("\nrelative gap to mpmath.jtheta, theta_1 and its third derivative at v = 0.7:")
for q in ("0.1", "0.5", "0.9", "0.99"):
    gaps = []
    for method in ("direct", "modular"):
        jet = theta_jet(1, "0.7", q, 3, ctx, method=method)
        with mpmath.workprec(320):
            ref0 = mpmath.jtheta(1, mpmath.mpf("0.7"), mpmath.mpf(q))
            ref3 = mpmath.jtheta(1, mpmath.mpf("0.7"), mpmath.mpf(q), 3)
        gaps.append(max(abs(jet[0] / ref0 - 1), abs(jet.derivative_value(3) / ref3 - 1)))
    print(f"  q = {q:>5}: direct {mp.nstr(gaps[0], 3):>10}   modular {mp.nstr(gaps[1], 3):>10}")

q = mp.mpf("0.2")
K = elliptic_K(q, ctx)
print("\nK(q=0.2) =", mp.nstr(K, 30))
print("sn(K)    =", mp.nstr(jacobi_sn(K, q, ctx), 30))

"""
Weights, regimes and the spectral parametrisation
=================================================

Every point (Delta, t) of the non-ferroelectric phase diagram corresponds to
a rapidity lambda and a crossing parameter eta. This script walks through a
few points and shows how the weights and the curve-parameter interval
change across the Delta = -1 boundary.
"""

from arcticcurve import params_from_phase, phase_from_spectral, weights_from_spectral, xi_max
from arcticcurve.params import crossing_reflect
from arcticcurve.precision import PrecisionContext

ctx = PrecisionContext(bits=128)
mp = ctx.mp

print(f"{'Delta':>8} {'t':>5}  {'regime':<19} {'lambda':>10} {'eta':>10} {'xi_max':>10}")
for delta in (-20, -3, -1.2, -0.9, 0, 0.5, 0.9):
    for t in (0.5, 1, 2):
        p = params_from_phase(delta, t, ctx)
        print(f"{delta:8} {t:5}  {p.regime.value:<19} {mp.nstr(p.lam, 6):>10} "
              f"{mp.nstr(p.eta, 6):>10} {mp.nstr(xi_max(p, ctx), 6):>10}")

# Exchanging a and b reflects the rapidity and inverts t.
p = params_from_phase(-3, 0.7, ctx)
q = crossing_reflect(p, ctx)
w, wq = weights_from_spectral(p, ctx), weights_from_spectral(q, ctx)
print("\nweights      ", [mp.nstr(v, 8) for v in (w.a, w.b, w.c)])
print("reflected    ", [mp.nstr(v, 8) for v in (wq.a, wq.b, wq.c)])
print("t, reflected t:", mp.nstr(phase_from_spectral(p, ctx).t, 10), mp.nstr(phase_from_spectral(q, ctx).t, 10))

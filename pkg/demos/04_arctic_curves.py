"""
Arctic curves from the anti-ferroelectric to the free-fermion point
===================================================================

Writes a family of curves at t = 1 to ``arctic_family.svg`` and prints the
contact points. As Delta decreases the curve flattens towards the diamond
|x - 1/2| + |y - 1/2| = 1/2; at Delta = 0 it is the inscribed circle.
"""

import sys

from arcticcurve import full_curve, params_from_phase
from arcticcurve.output import to_svg
from arcticcurve.precision import PrecisionContext

ctx = PrecisionContext(bits=192)
mp = ctx.mp

deltas = (0.5, 0, -0.5, -2, -10, -200)
curves, labels = [], []
for delta in deltas:
    p = params_from_phase(delta, 1, ctx)
    fc = full_curve(p, 96, ctx)
    curves.append(fc.portions)
    labels.append(f"Delta={delta}")
    corner = fc.portions[0]
    dev = max(abs(pt.x + pt.y - mp.mpf(0.5)) for pt in corner.points)
    print(f"Delta = {delta:>6}: contact {mp.nstr(corner.contact_x, 12)}, "
          f"max |x + y - 1/2| on the first portion = {mp.nstr(dev, 4)}")

path = sys.argv[1] if len(sys.argv) > 1 else "arctic_family.svg"
with open(path, "w") as fh:
    fh.write(to_svg(curves, labels))
print("wrote", path)

# away from t = 1 the four contacts move off the midpoints
fc = full_curve(params_from_phase(-3, 0.4, ctx), 32, ctx)
for side, (coord, mismatch) in fc.side_contacts().items():
    print(f"{side:>6}: contact at {mp.nstr(coord, 10)} (portions agree to {mp.nstr(mismatch, 2)})")

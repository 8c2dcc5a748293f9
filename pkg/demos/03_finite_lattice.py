"""
Exact partition functions on small lattices
===========================================

The domain-wall partition function has two independent evaluations here:
a Hankel determinant built from Taylor coefficients of c/(ab), and a
row-transfer enumeration of all configurations. At a = b = c the
enumeration counts alternating sign matrices.
"""

from arcticcurve import InhomogeneousSpec, enumerate_partition, partition_hankel, params_from_phase
from arcticcurve.finite_n import asm_count, boundary_distribution
from arcticcurve.params import weights_from_spectral
from arcticcurve.precision import PrecisionContext

ctx = PrecisionContext(bits=256)
mp = ctx.mp

print("ASM counts:", [asm_count(n) for n in range(1, 8)])

p = params_from_phase(-2.5, 0.8, ctx)
print("\n N   determinant                       enumeration                       rel. diff")
for n in range(1, 7):
    det = partition_hankel(n, p, ctx).value
    enum = enumerate_partition(InhomogeneousSpec.homogeneous(n, p.lam), p, ctx).value
    print(f"{n:2d}   {mp.nstr(det, 28):<32}  {mp.nstr(enum, 28):<32}  {mp.nstr(abs(det / enum - 1), 3)}")

# a = b = c sits at Delta = 1/2, t = 1
q = params_from_phase(0.5, 1, ctx)
c = weights_from_spectral(q, ctx).c
print("\nZ_N / c^(N^2) at a = b = c:", [int(mp.nint(partition_hankel(n, q, ctx).value / c ** (n * n)))
                                     for n in range(1, 9)])

print("\nwhere the first column turns (N = 6, Delta = -2.5, t = 0.8):")
dist = boundary_distribution(6, p, ctx)
for r, h in enumerate(dist.probs, start=1):
    print(f"  r = {r}: {mp.nstr(h, 10):<14} {'#' * int(60 * h)}")

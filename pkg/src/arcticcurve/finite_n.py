"""Exact finite-N quantities of the domain-wall six-vertex model.

Determinant side (homogeneous limits of the inhomogeneous determinant)::

    Z_N = (a b)^(N^2) det[ C(j+k, j) c_(j+k) ]_{j,k=0..N-1}

with c_m the Taylor coefficients of phi at lambda; this equals the usual
(a b)^(N^2) / prod (j!)^2 * det[phi^(j+k)]. With one rapidity shifted to
lambda + xi::

    Z_N(xi) = [a' b']^N (a b)^(N(N-1)) det M / (-sh xi)^(N-1)

where a', b' are the weights at lambda + xi, sh is sinh (AF) or sin
(disordered), the first row of M holds the Taylor coefficients of phi at
lambda + xi and row l (1 <= l < N) holds C(m+l-1, l-1) c_(m+l-1).

Enumeration side: row-to-row transfer over the 2^N column states of an
alternating-sign-matrix style encoding. At vertex (row k, column j) the
weights are those of the regime at rapidity lambda_j - nu_k; a zero entry is
an a-vertex when the column partial sum equals the row partial sum and a
b-vertex otherwise, nonzero entries are c-vertices.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Callable

from .errors import CapacityError, ParameterDomainError, PoleError, PrecisionExhaustedError
from .jet import TaylorJet, cot_jet, coth_jet
from .params import AF, SpectralParams, weights_at, xi_max
from .precision import PrecisionContext

log = logging.getLogger(__name__)

ENUMERATION_CAP = 8


@dataclass(frozen=True)
class PartitionValue:
    value: Any
    n: int
    params: SpectralParams
    bits: int = 0


@dataclass(frozen=True)
class BoundaryDistribution:
    """H_N^(r), r = 1..N: probability that the c-vertex of the boundary line
    sits at position r, counted so that r - 1 b-vertices precede it."""

    n: int
    probs: tuple
    params: SpectralParams

    def generating(self, z):
        """h_N(z) = sum_r H_N^(r) z^(r-1)."""
        return sum(h * z**r for r, h in enumerate(self.probs))


@dataclass(frozen=True)
class InhomogeneousSpec:
    lambdas: tuple
    nus: tuple

    def __post_init__(self):
        if len(self.lambdas) != len(self.nus):
            raise ValueError("need as many nu's as lambda's")

    @property
    def n(self):
        return len(self.lambdas)

    @classmethod
    def homogeneous(cls, n, lam):
        return cls(lambdas=(lam,) * n, nus=(0,) * n)


def _sh(x, p, mp):
    return mp.sinh(x) if p.regime is AF else mp.sin(x)


def _dlog_sh(x, p, mp):
    return mp.coth(x) if p.regime is AF else mp.cot(x)


def _dlog_weights(lam, p, mp):
    """(d/dlam log a, d/dlam log b) at rapidity lam."""
    eta = mp.mpf(p.eta)
    if p.regime is AF:
        return -mp.coth(eta - lam), mp.coth(eta + lam)
    return mp.cot(lam + eta), mp.cot(lam - eta)


def phi(lam, p: SpectralParams, ctx: PrecisionContext | None = None):
    """phi = c / (a b): sinh2eta / (sinh(eta-lam) sinh(eta+lam)) or the sine analogue."""
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    lam, eta = mp.mpf(lam), mp.mpf(p.eta)
    if p.regime is AF:
        den = mp.sinh(eta - lam) * mp.sinh(eta + lam)
        num = mp.sinh(2 * eta)
    else:
        den = mp.sin(lam + eta) * mp.sin(lam - eta)
        num = mp.sin(2 * eta)
    if den == 0:
        raise PoleError(f"phi has a pole at lambda = {lam}", location=lam)
    return num / den


def phi_jet(lam, order, p: SpectralParams, ctx: PrecisionContext | None = None) -> TaylorJet:
    """Taylor jet of phi about ``lam``.

    Built from coth(eta - lam) + coth(eta + lam) (AF) or
    cot(lam - eta) - cot(lam + eta) (disordered).
    """
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    lam, eta = mp.mpf(lam), mp.mpf(p.eta)
    try:
        if p.regime is AF:
            return coth_jet(eta - lam, order, mp, scale=-1) + coth_jet(eta + lam, order, mp)
        return cot_jet(lam - eta, order, mp) - cot_jet(lam + eta, order, mp)
    except ZeroDivisionError:
        raise PoleError(f"phi has a pole at lambda = {lam}", location=lam) from None


def _binomials(n, mp):
    rows = [[mp.one]]
    for i in range(1, n):
        prev = rows[-1]
        rows.append([mp.one] + [prev[j - 1] + prev[j] for j in range(1, i)] + [mp.one])
    return rows


def _hankel_rows(c, count, width, mp):
    """Rows l = 0..count-1 with entries C(m+l, l) c_(m+l), m = 0..width-1."""
    binom = _binomials(count + width, mp)
    return [[binom[m + l][l] * c[m + l] for m in range(width)] for l in range(count)]


def adaptive_evaluate(
    compute: Callable[[PrecisionContext], Any],
    ctx: PrecisionContext,
    label: str = "",
):
    """Evaluate ``compute`` at increasing precision until two runs agree.

    ``compute`` receives a PrecisionContext and returns an mpf or a tuple of
    mpf. Runs at p and p + 64 bits must agree to relative 2^(8 - ctx.bits);
    otherwise p is raised and the pair recomputed, up to ``ctx.max_bits``.
    """
    tol = ctx.mp.mpf(2) ** (8 - ctx.bits)
    bits = ctx.bits
    prev_ctx = ctx.with_bits(bits)
    prev = compute(prev_ctx)
    while True:
        hi_bits = bits + 64
        if hi_bits > ctx.max_bits:
            raise PrecisionExhaustedError(
                f"{label}: no agreement below the {ctx.max_bits}-bit cap"
            )
        cur = compute(ctx.with_bits(hi_bits))
        a = prev if isinstance(prev, tuple) else (prev,)
        b = cur if isinstance(cur, tuple) else (cur,)
        if all(abs(x - y) <= tol * abs(y) for x, y in zip(a, b)):
            out = tuple(ctx.mp.mpf(y) for y in b)
            return out if isinstance(cur, tuple) else out[0]
        log.info(
            "precision escalation for %s: %d and %d bits disagree", label, bits, hi_bits
        )
        bits = hi_bits
        prev = cur


def _require_n(n):
    if int(n) != n or n < 1:
        raise ValueError(f"lattice size must be a positive integer, got {n}")


def _hankel_det(n, lam, p, wctx):
    mp = wctx.mp
    c = phi_jet(lam, 2 * n - 2, p, wctx).coeffs
    return mp.det(mp.matrix(_hankel_rows(c, n, n, mp)))


def partition_hankel(n: int, p: SpectralParams, ctx: PrecisionContext | None = None) -> PartitionValue:
    """Homogeneous partition function Z_N from the Hankel determinant."""
    ctx = ctx or PrecisionContext()
    _require_n(n)
    p.require_interior(ctx)

    def compute(wctx):
        mp = wctx.mp
        w = weights_at(p.lam, p, wctx)
        return (w.a * w.b) ** (n * n) * _hankel_det(n, mp.mpf(p.lam), p, wctx)

    value = adaptive_evaluate(compute, ctx, f"Z_{n} Hankel")
    return PartitionValue(value=value, n=n, params=p, bits=ctx.bits)


def _check_xi(xi, p, ctx, allow_zero=True):
    mp = ctx.mp
    xi = mp.mpf(xi)
    lam1 = mp.mpf(p.lam) + xi
    top = xi_max(p, ctx)
    if xi == top:
        raise PoleError(f"xi = {xi} is the pole xi_max", location=xi)
    if not p.is_interior_rapidity(lam1, ctx):
        raise ParameterDomainError(f"lambda + xi = {lam1} leaves the {p.regime.value} domain")
    if not allow_zero and xi == 0:
        raise ParameterDomainError("xi must be nonzero here")
    return xi


def _inhom_matrix(n, lam, xi, p, wctx, derivative_row=False):
    mp = wctx.mp
    c = phi_jet(lam, 2 * n - 2, p, wctx).coeffs
    d = phi_jet(lam + xi, n, p, wctx)
    if derivative_row:
        first = list(d.derivative().coeffs[:n])
    else:
        first = list(d.coeffs[:n])
    rows = [first] + _hankel_rows(c, n - 1, n, mp)
    return mp.matrix(rows)


def _one_inhom_value(n, p, xi, wctx):
    mp = wctx.mp
    lam, xi = mp.mpf(p.lam), mp.mpf(xi)
    w = weights_at(lam, p, wctx)
    w1 = weights_at(lam + xi, p, wctx)
    det = mp.det(_inhom_matrix(n, lam, xi, p, wctx))
    return (w1.a * w1.b) ** n * (w.a * w.b) ** (n * (n - 1)) * det / (-_sh(xi, p, mp)) ** (n - 1)


def partition_one_inhomogeneity(
    n: int, p: SpectralParams, xi, ctx: PrecisionContext | None = None
) -> PartitionValue:
    """Z_N(lambda + xi, lambda, ..., lambda; 0, ..., 0)."""
    ctx = ctx or PrecisionContext()
    _require_n(n)
    p.require_interior(ctx)
    xi = _check_xi(xi, p, ctx)
    if xi == 0:
        return partition_hankel(n, p, ctx)
    value = adaptive_evaluate(
        lambda wctx: _one_inhom_value(n, p, xi, wctx), ctx, f"Z_{n}(xi)"
    )
    return PartitionValue(value=value, n=n, params=p, bits=ctx.bits)


def gamma_map(xi, p: SpectralParams, ctx: PrecisionContext | None = None):
    """gamma(xi) = a(lam) b(lam + xi) / (b(lam) a(lam + xi)).

    AF: [sinh(eta-lam)/sinh(eta+lam)] [sinh(eta+lam+xi)/sinh(eta-lam-xi)].
    Disordered: the same weight ratio with the sine weights.
    """
    ctx = ctx or PrecisionContext()
    xi = _check_xi(xi, p, ctx)
    mp = ctx.mp
    w = weights_at(p.lam, p, ctx)
    w1 = weights_at(mp.mpf(p.lam) + xi, p, ctx)
    return w.a * w1.b / (w.b * w1.a)


def h_generating(n: int, p: SpectralParams, xi, ctx: PrecisionContext | None = None):
    """h_N(gamma(xi)) = [a(lam)/a(lam+xi)]^(N-1) Z_N(xi) / Z_N."""
    ctx = ctx or PrecisionContext()
    _require_n(n)
    p.require_interior(ctx)
    xi = _check_xi(xi, p, ctx)
    if xi == 0 or n == 1:
        return ctx.mp.one

    def compute(wctx):
        mp = wctx.mp
        lam, x = mp.mpf(p.lam), mp.mpf(xi)
        w = weights_at(lam, p, wctx)
        w1 = weights_at(lam + x, p, wctx)
        det_m = mp.det(_inhom_matrix(n, lam, x, p, wctx))
        det_h = _hankel_det(n, lam, p, wctx)
        ratio = (w1.a * w1.b / (w.a * w.b)) ** n * det_m / det_h / (-_sh(x, p, mp)) ** (n - 1)
        return (w.a / w1.a) ** (n - 1) * ratio

    return adaptive_evaluate(compute, ctx, f"h_{n}")


def finite_log_deriv(n: int, p: SpectralParams, xi, ctx: PrecisionContext | None = None):
    """(1/N) d/dxi log h_N(gamma(xi)), from one extra jet order in the first row."""
    ctx = ctx or PrecisionContext()
    _require_n(n)
    p.require_interior(ctx)
    xi = _check_xi(xi, p, ctx, allow_zero=False)
    if n == 1:
        return ctx.mp.zero

    def compute(wctx):
        mp = wctx.mp
        lam, x = mp.mpf(p.lam), mp.mpf(xi)
        dla, dlb = _dlog_weights(lam + x, p, mp)
        det_m = mp.det(_inhom_matrix(n, lam, x, p, wctx))
        det_dm = mp.det(_inhom_matrix(n, lam, x, p, wctx, derivative_row=True))
        total = -(n - 1) * dla + n * (dla + dlb) + det_dm / det_m - (n - 1) * _dlog_sh(x, p, mp)
        return total / n

    return adaptive_evaluate(compute, ctx, f"dlog h_{n}")


def _transfer(n, weight, mp, track_first_column=False):
    """Sum of configuration weights keyed by the row of column 0's c-vertex."""
    states = {(0, None): mp.one}
    for k in range(n):
        cur = {(cols, 0, mark): w for (cols, mark), w in states.items()}
        for j in range(n):
            a, b, c = weight(j, k)
            bit = 1 << j
            nxt = defaultdict(lambda: mp.zero)
            for (cols, h, mark), w in cur.items():
                cj = 1 if cols & bit else 0
                if cj == h:
                    nxt[(cols, h, mark)] += w * a
                    mark2 = k if (track_first_column and j == 0) else mark
                    nxt[(cols ^ bit, 1 - h, mark2)] += w * c
                else:
                    nxt[(cols, h, mark)] += w * b
            cur = nxt
        states = defaultdict(lambda: mp.zero)
        for (cols, h, mark), w in cur.items():
            if h == 1:
                states[(cols, mark)] += w
    full = (1 << n) - 1
    return {mark: w for (cols, mark), w in states.items() if cols == full}


def _check_cap(n, cap):
    if n > cap:
        raise CapacityError(f"N = {n} exceeds the enumeration cap {cap}")


def enumerate_partition(
    spec: InhomogeneousSpec,
    p: SpectralParams,
    ctx: PrecisionContext | None = None,
    cap: int = ENUMERATION_CAP,
) -> PartitionValue:
    """Brute-force Z_N with vertex (row k, column j) at rapidity lambda_j - nu_k."""
    ctx = ctx or PrecisionContext()
    n = spec.n
    _require_n(n)
    _check_cap(n, cap)
    mp = ctx.mp
    lams = [mp.mpf(x) for x in spec.lambdas]
    nus = [mp.mpf(x) for x in spec.nus]
    table = {}

    def weight(j, k):
        key = (j, k)
        if key not in table:
            w = weights_at(lams[j] - nus[k], p, ctx)
            table[key] = (w.a, w.b, w.c)
        return table[key]

    total = sum(_transfer(n, weight, mp).values(), mp.zero)
    return PartitionValue(value=total, n=n, params=p, bits=ctx.bits)


def boundary_distribution(
    n: int,
    p: SpectralParams,
    ctx: PrecisionContext | None = None,
    cap: int = ENUMERATION_CAP,
) -> BoundaryDistribution:
    """H_N^(r) by exact enumeration along the first column."""
    ctx = ctx or PrecisionContext()
    _require_n(n)
    _check_cap(n, cap)
    mp = ctx.mp
    w = weights_at(p.lam, p, ctx)
    abc = (w.a, w.b, w.c)
    by_row = _transfer(n, lambda j, k: abc, mp, track_first_column=True)
    z = sum(by_row.values(), mp.zero)
    # c-vertex in row k has k a-vertices above it and n-1-k b-vertices below
    probs = [mp.zero] * n
    for k, weight in by_row.items():
        probs[n - 1 - k] = weight / z
    return BoundaryDistribution(n=n, probs=tuple(probs), params=p)


class _IntOps:
    zero = 0
    one = 1


def asm_count(n: int) -> int:
    """Number of n x n alternating sign matrices (all weights equal to 1)."""
    _require_n(n)
    return _transfer(n, lambda j, k: (1, 1, 1), _IntOps)[None]

"""Resolvent maps, the curve function Psi and the parametric arctic curve.

One portion of the curve is parametrised by xi in (0, xi_max): xi -> 0 is the
contact with the x-axis, xi -> xi_max the contact with the y-axis. At each xi
the pair (x, y) solves f = f' = 0 for

    f(xi) = x phi(xi + lambda) + y g(xi) - Psi(xi),

where g(xi) = phi(xi - eta) in the anti-ferroelectric regime and
g(xi) = phi(xi + eta) in the disordered one (both are what the change of
variable z = gamma(xi) produces from the y-terms of the original F(z)).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np

from .errors import (
    BranchError,
    ConsistencyError,
    DegeneratePointError,
    ParameterDomainError,
    PoleError,
)
from .finite_n import phi_jet
from .jet import TaylorJet, cot_jet, coth_jet
from .params import AF, DIS, SpectralParams, crossing_reflect, xi_max
from .precision import PrecisionContext
from .specfun import (
    elliptic_K,
    elliptic_modulus,
    jacobi_sn,
    log_deriv_theta1,
    log_deriv_theta1_jet,
    log_deriv_theta4,
    nome_af,
    theta_jet,
)

DEFAULT_POINTS = 256
RICHARDSON_EPS = 1e-3
RICHARDSON_LEVELS = 10


@dataclass(frozen=True)
class ResolventParams:
    """Constants of the large-N resolvent.

    Anti-ferroelectric: kappa = pi (eta - lam) / (4 eta), alpha = pi / (2 eta),
    q = exp(-pi^2 / (2 eta)), u_inf = 2 K kappa / pi,
    beta = pi theta1'/theta1 (kappa), beta' = pi theta4'/theta4 (kappa).
    Disordered: kappa = pi (pi - eta - lam) / (2 (pi - 2 eta)),
    alpha = pi / (pi - 2 eta); the elliptic fields are None.
    """

    kappa_var: Any
    alpha: Any
    xi_max: Any
    q: Any = None
    K: Any = None
    modulus: Any = None
    beta: Any = None
    beta_prime: Any = None
    u_inf: Any = None
    sn2_inf: Any = None


def resolvent_params(p: SpectralParams, ctx: PrecisionContext | None = None) -> ResolventParams:
    ctx = ctx or PrecisionContext()
    p.require_interior(ctx)
    mp = ctx.mp
    lam, eta = mp.mpf(p.lam), mp.mpf(p.eta)
    top = xi_max(p, ctx)
    if p.regime is not AF:
        return ResolventParams(
            kappa_var=mp.pi * (mp.pi - eta - lam) / (2 * (mp.pi - 2 * eta)),
            alpha=mp.pi / (mp.pi - 2 * eta),
            xi_max=top,
        )
    kappa = mp.pi * (eta - lam) / (4 * eta)
    q = nome_af(eta, ctx)
    K = elliptic_K(q, ctx)
    u_inf = 2 * K * kappa / mp.pi
    return ResolventParams(
        kappa_var=kappa,
        alpha=mp.pi / (2 * eta),
        xi_max=top,
        q=q,
        K=K,
        modulus=elliptic_modulus(q, ctx),
        beta=mp.pi * log_deriv_theta1(kappa, q, ctx),
        beta_prime=mp.pi * log_deriv_theta4(kappa, q, ctx),
        u_inf=u_inf,
        sn2_inf=jacobi_sn(u_inf, q, ctx) ** 2,
    )


def _require_regime(p, regime):
    if p.regime is not regime:
        raise ParameterDomainError(f"expected {regime.value} parameters, got {p.regime.value}")


def _open_xi(xi, rp, mp):
    xi = mp.mpf(xi)
    if xi == 0 or xi == rp.xi_max:
        raise PoleError(f"xi = {xi} is an endpoint pole", location=xi)
    if not 0 < xi < rp.xi_max:
        raise ParameterDomainError(f"xi = {xi} outside (0, {rp.xi_max})")
    return xi


def _agreement(values, ctx, label):
    mp = ctx.mp
    ref = values[-1]
    tol = mp.mpf(2) ** (32 - ctx.bits) * (1 + abs(ref))
    for v in values[:-1]:
        if abs(v - ref) > tol:
            raise ConsistencyError(f"{label}: forms disagree ({v} vs {ref})")
    return ref


# -- anti-ferroelectric resolvent -------------------------------------------


def w_inverse_af_forms(xi, p: SpectralParams, ctx: PrecisionContext | None = None, rp=None):
    """All closed forms of W^{-1}(xi) in the anti-ferroelectric regime.

    Returns (sn quotient, theta-squared quotient, theta product, log-derivative
    difference). The theta product is written with a plus sign between its
    two numerator terms; with a minus it does not match the other three.
    """
    ctx = ctx or PrecisionContext()
    _require_regime(p, AF)
    mp = ctx.mp
    rp = rp or resolvent_params(p, ctx)
    xi = _open_xi(xi, rp, mp)
    eta, lam = mp.mpf(p.eta), mp.mpf(p.lam)
    q, al, kap = rp.q, rp.alpha, rp.kappa_var

    s = jacobi_sn(rp.u_inf - rp.K * xi / eta, q, ctx) ** 2
    sn_form = (rp.beta * rp.sn2_inf - rp.beta_prime * s) / (eta * (rp.sn2_inf - s))

    def th(kind, v):
        j = theta_jet(kind, v, q, 1, ctx)
        return j[0], j[1]

    t1k, t1k_d = th(1, kap)
    t4k, t4k_d = th(4, kap)
    t1v, _ = th(1, kap - al * xi)
    t4v, _ = th(4, kap - al * xi)
    sq_form = (
        2 * al * (t1k * t1k_d * t4v**2 - t4k * t4k_d * t1v**2)
        / (t1k**2 * t4v**2 - t4k**2 * t1v**2)
    )

    a1, a1_d = th(1, 2 * kap - al * xi)
    b1, b1_d = th(1, al * xi)
    prod_form = al * (a1_d * b1 + a1 * b1_d) / (a1 * b1)

    ld_form = al * log_deriv_theta1(al * xi, q, ctx) - al * log_deriv_theta1(
        al * (xi + lam + eta), q, ctx
    )
    return sn_form, sq_form, prod_form, ld_form


def w_inverse_af(xi, p: SpectralParams, ctx: PrecisionContext | None = None, check=True, rp=None):
    """W^{-1}(xi) = alpha theta1'/theta1(alpha xi) - alpha theta1'/theta1(alpha (xi + lam + eta)).

    With ``check`` the other closed forms are evaluated too and must agree.
    """
    ctx = ctx or PrecisionContext()
    if check:
        return _agreement(w_inverse_af_forms(xi, p, ctx, rp), ctx, "W^-1 (AF)")
    _require_regime(p, AF)
    mp = ctx.mp
    rp = rp or resolvent_params(p, ctx)
    xi = _open_xi(xi, rp, mp)
    eta, lam = mp.mpf(p.eta), mp.mpf(p.lam)
    al = rp.alpha
    return al * log_deriv_theta1(al * xi, rp.q, ctx) - al * log_deriv_theta1(
        al * (xi + lam + eta), rp.q, ctx
    )


def w_forward_af(z, p: SpectralParams, ctx: PrecisionContext | None = None, branch=1, rp=None):
    """W(z) = -(eta/K) [u(eta z) - u_inf] with sn^2 u = (beta - eta z)/(beta' - eta z) sn^2 u_inf.

    ``branch=+1`` takes u in [0, u_inf] (xi <= xi_max/2, the sheet on which
    W ~ 1/z); ``branch=-1`` takes u in [-u_inf, 0].
    """
    ctx = ctx or PrecisionContext()
    _require_regime(p, AF)
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    mp = ctx.mp
    rp = rp or resolvent_params(p, ctx)
    z = mp.mpf(z)
    eta = mp.mpf(p.eta)
    if mp.isinf(z):
        return mp.zero if branch == 1 else rp.xi_max
    den = rp.beta_prime - eta * z
    if den == 0:
        raise BranchError(f"z = {z} sits on the pole beta'/eta of the sn^2 relation")
    s = (rp.beta - eta * z) / den * rp.sn2_inf
    if not 0 <= s <= rp.sn2_inf:
        raise BranchError(
            f"z = {z} gives sn^2 u = {mp.nstr(s, 8)} outside [0, sn^2 u_inf]; "
            f"the real branch needs z >= beta/eta = {mp.nstr(rp.beta / eta, 12)}"
        )
    u = branch * mp.ellipf(mp.asin(mp.sqrt(s)), rp.modulus**2)
    return eta / rp.K * (rp.u_inf - u)


# -- disordered resolvent ----------------------------------------------------


def w_inverse_dis_forms(xi, p: SpectralParams, ctx: PrecisionContext | None = None, rp=None):
    """(tan quotient, cot difference) forms of W^{-1}(xi) in the disordered regime."""
    ctx = ctx or PrecisionContext()
    _require_regime(p, DIS)
    mp = ctx.mp
    rp = rp or resolvent_params(p, ctx)
    xi = _open_xi(xi, rp, mp)
    lam, eta = mp.mpf(p.lam), mp.mpf(p.eta)
    al, kap = rp.alpha, rp.kappa_var
    tk = mp.tan(kap)
    tv2 = mp.tan(kap - al * xi) ** 2
    tan_form = -2 * al * tk * (tv2 + 1) / (tv2 - tk**2)
    cot_form = al * mp.cot(al * xi) - al * mp.cot(al * (xi + lam - eta))
    return tan_form, cot_form


def w_inverse_dis(xi, p: SpectralParams, ctx: PrecisionContext | None = None, check=True, rp=None):
    """W^{-1}(xi) = alpha cot(alpha xi) - alpha cot(alpha (xi + lam - eta))."""
    ctx = ctx or PrecisionContext()
    forms = w_inverse_dis_forms(xi, p, ctx, rp)
    if check:
        return _agreement(forms, ctx, "W^-1 (disordered)")
    return forms[1]


def w_forward_dis(z, p: SpectralParams, ctx: PrecisionContext | None = None, branch=1, rp=None):
    """Single-cut resolvent

        W(z) = kappa/alpha + 1/(i alpha) log[(sqrt(z + 2 alpha T) - i sqrt(z T^2 - 2 alpha T))
                                             / sqrt(z (T^2 + 1))],   T = tan kappa.

    ``branch=-1`` flips the sign of the second square root (other sheet).
    """
    ctx = ctx or PrecisionContext()
    _require_regime(p, DIS)
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    mp = ctx.mp
    rp = rp or resolvent_params(p, ctx)
    z = mp.mpf(z)
    if mp.isinf(z):
        return mp.zero if branch == 1 else rp.xi_max
    al, kap = rp.alpha, rp.kappa_var
    T = mp.tan(kap)
    r1 = z * T**2 - 2 * al * T
    if r1 < 0 or z <= 0:
        raise BranchError(
            f"z = {z} is off the real branch; need z >= 2 alpha cot(kappa) = {mp.nstr(2 * al / T, 12)}"
        )
    num = mp.sqrt(z + 2 * al * T) - branch * 1j * mp.sqrt(r1)
    w = kap / al + mp.log(num / mp.sqrt(z * (T**2 + 1))) / (1j * al)
    if abs(mp.im(w)) > mp.mpf(2) ** (16 - ctx.bits) * (1 + abs(w)):
        raise BranchError(f"W({z}) is not real on this branch")
    return mp.re(w)


def w_forward(z, p, ctx=None, branch=1):
    return (w_forward_af if p.regime is AF else w_forward_dis)(z, p, ctx, branch)


def w_inverse(xi, p, ctx=None, check=True):
    return (w_inverse_af if p.regime is AF else w_inverse_dis)(xi, p, ctx, check)


# -- Psi and the curve -------------------------------------------------------


def asymptotic_log_deriv(xi, p: SpectralParams, ctx: PrecisionContext | None = None, rp=None):
    """Large-N limit of (1/N) d/dxi log h_N(gamma(xi)).

    AF: coth(xi + lam + eta) - coth(xi) + W^{-1}(xi);
    disordered: cot(xi + lam - eta) - cot(xi) + W^{-1}(xi).
    """
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    rp = rp or resolvent_params(p, ctx)
    xi = _open_xi(xi, rp, mp)
    lam, eta = mp.mpf(p.lam), mp.mpf(p.eta)
    if p.regime is AF:
        return mp.coth(xi + lam + eta) - mp.coth(xi) + w_inverse_af(xi, p, ctx, False, rp)
    return mp.cot(xi + lam - eta) - mp.cot(xi) + w_inverse_dis(xi, p, ctx, False, rp)


def psi_jet(xi, order, p: SpectralParams, ctx: PrecisionContext | None = None, rp=None) -> TaylorJet:
    """Taylor jet of Psi about xi.

    AF: coth xi - coth(xi + lam - eta) - alpha L(alpha xi) + alpha L(alpha (xi + lam + eta)),
    L = theta1'/theta1. Disordered: cot xi - cot(xi + lam + eta) - alpha cot(alpha xi)
    + alpha cot(alpha (xi + lam - eta)).
    """
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    rp = rp or resolvent_params(p, ctx)
    xi = _open_xi(xi, rp, mp)
    lam, eta = mp.mpf(p.lam), mp.mpf(p.eta)
    al = rp.alpha
    if p.regime is AF:
        return (
            coth_jet(xi, order, mp)
            - coth_jet(xi + lam - eta, order, mp)
            - log_deriv_theta1_jet(al * xi, rp.q, order, ctx, scale=al) * al
            + log_deriv_theta1_jet(al * (xi + lam + eta), rp.q, order, ctx, scale=al) * al
        )
    return (
        cot_jet(xi, order, mp)
        - cot_jet(xi + lam + eta, order, mp)
        - cot_jet(al * xi, order, mp, scale=al) * al
        + cot_jet(al * (xi + lam - eta), order, mp, scale=al) * al
    )


def psi(xi, p: SpectralParams, ctx: PrecisionContext | None = None, rp=None):
    return psi_jet(xi, 0, p, ctx, rp)[0]


def _coefficient_jets(xi, order, p, ctx):
    mp = ctx.mp
    lam, eta = mp.mpf(p.lam), mp.mpf(p.eta)
    x_coef = phi_jet(xi + lam, order, p, ctx)
    y_coef = phi_jet(xi - eta if p.regime is AF else xi + eta, order, p, ctx)
    return x_coef, y_coef


def curve_jets(xi, order, p: SpectralParams, ctx: PrecisionContext | None = None, rp=None):
    """Jets (x, y) of the curve about xi, of the given order."""
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    rp = rp or resolvent_params(p, ctx)
    xi = _open_xi(xi, rp, mp)
    ps = psi_jet(xi, order + 1, p, ctx, rp)
    fx, fy = _coefficient_jets(xi, order + 1, p, ctx)
    ps_d, fx_d, fy_d = ps.derivative(), fx.derivative(), fy.derivative()
    ps, fx, fy = ps.truncate(order), fx.truncate(order), fy.truncate(order)
    den = fx * fy_d - fy * fx_d
    if den[0] == 0:
        raise DegeneratePointError(f"singular curve system at xi = {xi}")
    x = (fy_d * ps - fy * ps_d) / den
    y = (fx * ps_d - fx_d * ps) / den
    return x, y


@dataclass(frozen=True)
class CurvePoint:
    xi: Any
    x: Any
    y: Any


def curve_residuals(pt: CurvePoint, p: SpectralParams, ctx: PrecisionContext | None = None, rp=None):
    """(f(xi), f'(xi)) at the point's (x, y); both vanish on the curve."""
    ctx = ctx or PrecisionContext()
    ps = psi_jet(pt.xi, 1, p, ctx, rp)
    fx, fy = _coefficient_jets(ctx.mp.mpf(pt.xi), 1, p, ctx)
    f = pt.x * fx[0] + pt.y * fy[0] - ps[0]
    fd = pt.x * fx[1] + pt.y * fy[1] - ps[1]
    return f, fd


def curve_point(xi, p: SpectralParams, ctx: PrecisionContext | None = None, rp=None) -> CurvePoint:
    """Solve f = f' = 0 for (x, y) at xi, then verify the residuals."""
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    rp = rp or resolvent_params(p, ctx)
    x, y = curve_jets(xi, 0, p, ctx, rp)
    pt = CurvePoint(xi=mp.mpf(xi), x=x[0], y=y[0])
    f, fd = curve_residuals(pt, p, ctx, rp)
    ps = psi_jet(pt.xi, 1, p, ctx, rp)
    fx, fy = _coefficient_jets(pt.xi, 1, p, ctx)
    scale = [abs(pt.x * fx[k]) + abs(pt.y * fy[k]) + abs(ps[k]) for k in (0, 1)]
    tol = mp.mpf(2) ** (24 - ctx.bits)
    if abs(f) > tol * scale[0] or abs(fd) > tol * scale[1]:
        raise ConsistencyError(f"curve system residual too large at xi = {xi}")
    return pt


def chebyshev_grid(top, n, mp):
    """n Chebyshev nodes of the first kind on (0, top), clustered at both ends."""
    return [top * (1 - mp.cos(mp.pi * (i + mp.mpf(0.5)) / n)) / 2 for i in range(n)]


def richardson_limit(func, x0, direction, eps, levels, mp):
    """Extrapolate func(x0 + direction*h) to h -> 0 from h = eps * 2^-k.

    Returns (limit, previous-diagonal estimate, innermost sample point).
    """
    hs = [mp.mpf(eps) / 2**k for k in range(levels)]
    table = [[func(x0 + direction * h)] for h in hs]
    for k in range(1, levels):
        for j in range(1, k + 1):
            prev, prev_up = table[k][j - 1], table[k - 1][j - 1]
            table[k].append(prev + (prev - prev_up) / (2**j - 1))
    return table[-1][-1], table[-2][-2], x0 + direction * hs[-1]


@dataclass(frozen=True)
class CurvePortion:
    """One quarter of the arctic curve, attached to a corner of the unit square.

    ``contact_x`` / ``contact_y`` are the distances from ``corner`` of the
    contacts with the horizontal and vertical sides. ``start_gap`` and
    ``end_gap`` are the extrapolated y at xi -> 0 and x at xi -> xi_max (both
    should vanish). ``slope_start`` is dy/dx at the innermost sample near the
    x-axis contact and ``slope_end`` is dx/dy near the y-axis contact; both
    tend to zero for a tangential contact.
    """

    points: tuple
    contact_x: Any
    contact_y: Any
    params: SpectralParams
    xi_max: Any
    corner: tuple = (0, 0)
    start_gap: Any = None
    end_gap: Any = None
    slope_start: Any = None
    slope_end: Any = None
    extrapolation_spread: Any = None
    metadata: dict = field(default_factory=dict)

    def mapped(self, corner) -> "CurvePortion":
        """Reflect this corner-(0,0) portion to another corner of the square."""
        if self.corner != (0, 0):
            raise ValueError("only corner-(0,0) portions can be reflected")
        cx, cy = corner

        def m(pt):
            x = 1 - pt.x if cx else pt.x
            y = 1 - pt.y if cy else pt.y
            return CurvePoint(pt.xi, x, y)

        return replace(self, points=tuple(m(pt) for pt in self.points), corner=tuple(corner))

    def contact_points(self):
        """Contacts with the horizontal and vertical sides, in square coordinates."""
        cx, cy = self.corner
        horiz = (1 - self.contact_x if cx else self.contact_x, cy)
        vert = (cx, 1 - self.contact_y if cy else self.contact_y)
        return horiz, vert


def _portion_xi_grid(rp, n_points, grid, mp):
    if grid is None:
        return chebyshev_grid(rp.xi_max, n_points, mp)
    return [mp.mpf(g) for g in grid]


def curve_portion(
    p: SpectralParams,
    n_points: int = DEFAULT_POINTS,
    ctx: PrecisionContext | None = None,
    grid=None,
) -> CurvePortion:
    """Sample the portion at the corner (0, 0) and extrapolate its endpoints."""
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    rp = resolvent_params(p, ctx)
    xs = _portion_xi_grid(rp, n_points, grid, mp)
    points = tuple(curve_point(xi, p, ctx, rp) for xi in xs)

    eps = min(mp.mpf(RICHARDSON_EPS), rp.xi_max / 64)

    def comp(k):
        def f(xi):
            x, y = curve_jets(xi, 0, p, ctx, rp)
            return (x[0], y[0])[k]

        return f

    contact_x, cx_prev, inner0 = richardson_limit(comp(0), mp.zero, 1, eps, RICHARDSON_LEVELS, mp)
    start_gap, _, _ = richardson_limit(comp(1), mp.zero, 1, eps, RICHARDSON_LEVELS, mp)
    contact_y, cy_prev, inner1 = richardson_limit(comp(1), rp.xi_max, -1, eps, RICHARDSON_LEVELS, mp)
    end_gap, _, _ = richardson_limit(comp(0), rp.xi_max, -1, eps, RICHARDSON_LEVELS, mp)
    spread = max(abs(contact_x - cx_prev), abs(contact_y - cy_prev))
    if spread > mp.mpf("1e-10"):
        raise ConsistencyError(f"endpoint extrapolation did not settle (spread {mp.nstr(spread, 3)})")

    def slopes(xi):
        x, y = curve_jets(xi, 1, p, ctx, rp)
        return y[1] / x[1], x[1] / y[1]

    return CurvePortion(
        points=points,
        contact_x=contact_x,
        contact_y=contact_y,
        params=p,
        xi_max=rp.xi_max,
        start_gap=start_gap,
        end_gap=end_gap,
        slope_start=slopes(inner0)[0],
        slope_end=slopes(inner1)[1],
        extrapolation_spread=spread,
    )


@dataclass(frozen=True)
class FullCurve:
    """Four portions, one per corner: (0,0), (1,0), (0,1), (1,1)."""

    portions: tuple

    def all_points(self):
        return [(pt.x, pt.y) for portion in self.portions for pt in portion.points]

    def side_contacts(self):
        """Per side: (contact coordinate along the side, mismatch between the two portions)."""
        by_corner = {portion.corner: portion for portion in self.portions}
        sides = {
            "bottom": ((0, 0), (1, 0), 0),
            "top": ((0, 1), (1, 1), 0),
            "left": ((0, 0), (0, 1), 1),
            "right": ((1, 0), (1, 1), 1),
        }
        out = {}
        for name, (c1, c2, which) in sides.items():
            # which = 0: the contact on a horizontal side, coordinate x
            p1 = by_corner[c1].contact_points()[which]
            p2 = by_corner[c2].contact_points()[which]
            coord = 0 if which == 0 else 1
            out[name] = ((p1[coord] + p2[coord]) / 2, abs(p1[coord] - p2[coord]))
        return out


def full_curve(
    p: SpectralParams,
    n_points: int = DEFAULT_POINTS,
    ctx: PrecisionContext | None = None,
) -> FullCurve:
    """Complete the curve by the lattice symmetries.

    Half-turn rotation keeps the weights and carries the (0,0) portion to
    (1,1). Left-right and up-down reflections exchange a and b, so the (1,0)
    and (0,1) portions are reflections of the portion computed with
    crossing-reflected parameters.
    """
    ctx = ctx or PrecisionContext()
    base = curve_portion(p, n_points, ctx)
    crossed_params = crossing_reflect(p, ctx)
    if ctx.mp.mpf(crossed_params.lam) == ctx.mp.mpf(p.lam):
        crossed = base
    else:
        crossed = curve_portion(crossed_params, n_points, ctx)
    return FullCurve(
        portions=(
            base,
            crossed.mapped((1, 0)),
            crossed.mapped((0, 1)),
            base.mapped((1, 1)),
        )
    )


def hausdorff_distance(a, b) -> float:
    """Symmetric Hausdorff distance between two planar point sets (float64)."""
    A = np.asarray([[float(x), float(y)] for x, y in a])
    B = np.asarray([[float(x), float(y)] for x, y in b])
    d = np.sqrt(((A[:, None, :] - B[None, :, :]) ** 2).sum(-1))
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def diagonal_asymmetry(curve: FullCurve) -> float:
    """Hausdorff distance between the full curve and its mirror image in y = x."""
    pts = curve.all_points()
    return hausdorff_distance(pts, [(y, x) for x, y in pts])

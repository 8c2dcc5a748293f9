"""Jacobi theta functions, complete elliptic integral K and Jacobi sn.

Nome convention (argument *not* scaled by pi)::

    theta1(v, q) = 2 sum_{n>=0} (-1)^n q^((n+1/2)^2) sin((2n+1) v)
    theta2(v, q) = 2 sum_{n>=0}        q^((n+1/2)^2) cos((2n+1) v)
    theta3(v, q) = 1 + 2 sum_{n>=1}        q^(n^2) cos(2n v)
    theta4(v, q) = 1 + 2 sum_{n>=1} (-1)^n q^(n^2) cos(2n v)

For q above ``ctx.modular_threshold`` the series are replaced by their images
under the imaginary modular transformation. With q = exp(-pi s) and
q' = exp(-pi / s)::

    theta_k(v, q) = s^(-1/2) exp(-v^2 / (pi s)) T_k(v / s, q')

where T_k are hyperbolic series at q' (T_2 has the shape of theta4 and T_4
the shape of theta2, see ``_dual_series_jet``). Arguments are first reduced
into [-pi/2, pi/2] so the Gaussian prefactor stays O(1). Derivatives come from term-wise differentiation, carried as
Taylor jets.
"""

from __future__ import annotations

from .errors import ParameterDomainError, PoleError
from .jet import TaylorJet
from .precision import PrecisionContext

_GUARD_BITS = 24


def nome_af(eta, ctx: PrecisionContext):
    """Elliptic nome q = exp(-pi^2 / (2 eta)) of the anti-ferroelectric regime."""
    mp = ctx.mp
    return mp.exp(-mp.pi**2 / (2 * mp.mpf(eta)))


def _check_nome(q, mp):
    q = mp.mpf(q)
    if not 0 < q < 1:
        raise ParameterDomainError(f"nome must lie in (0, 1), got {q}")
    return q


def _reduce(kind, v, mp):
    """Shift v into [-pi/2, pi/2]; returns (v_reduced, sign)."""
    k = mp.nint(v / mp.pi)
    sign = -1 if (kind in (1, 2) and int(k) % 2) else 1
    return v - k * mp.pi, sign


def _direct_jet(kind, v, q, order, mp, tol):
    # d^k/dv^k of trig(m v) at v: m^k * trig(m v + k pi/2); jet coeff divides by k!
    out = [mp.zero] * (order + 1)
    invfact = [mp.one]
    for k in range(1, order + 1):
        invfact.append(invfact[-1] / k)
    if kind in (3, 4):
        out[0] = mp.one
    n = 0 if kind in (1, 2) else 1
    while True:
        if kind in (1, 2):
            m = 2 * n + 1
            expo = (n + mp.mpf(0.5)) ** 2
        else:
            m = 2 * n
            expo = n * n
        sgn = -1 if (kind in (1, 4) and n % 2) else 1
        amp = 2 * sgn * q**expo
        base = m * v
        big = abs(amp) * mp.mpf(m) ** order
        for k in range(order + 1):
            ang = base + k * mp.pi / 2
            tr = mp.sin(ang) if kind == 1 else mp.cos(ang)
            out[k] += amp * mp.mpf(m) ** k * tr * invfact[k]
        scale = 1 + abs(out[min(order, len(out) - 1)]) + abs(out[0])
        if big < tol * scale:
            break
        n += 1
    return out


def _dual_series_jet(kind, w0, dscale, qp, order, mp, tol):
    """Jet in h of T_kind(w0 + dscale*h) at nome qp.

    T_1 = 2 sum (-1)^n qp^((n+1/2)^2) sinh((2n+1) w)
    T_2 = 1 + 2 sum (-1)^n qp^(n^2) cosh(2n w)
    T_3 = 1 + 2 sum qp^(n^2) cosh(2n w)
    T_4 = 2 sum qp^((n+1/2)^2) cosh((2n+1) w)
    """
    out = [mp.zero] * (order + 1)
    invfact = [mp.one]
    for k in range(1, order + 1):
        invfact.append(invfact[-1] / k)
    if kind in (2, 3):
        out[0] = mp.one
    n = 0 if kind in (1, 4) else 1
    peak_passed = False
    prev = None
    while True:
        if kind in (1, 4):
            m = 2 * n + 1
            expo = (n + mp.mpf(0.5)) ** 2
        else:
            m = 2 * n
            expo = n * n
        sgn = -1 if (kind in (1, 2) and n % 2) else 1
        amp = 2 * sgn * qp**expo
        x = m * w0
        sh, ch = mp.sinh(x), mp.cosh(x)
        md = m * dscale
        p = mp.one
        for k in range(order + 1):
            # kind 1 is odd (sinh); others even (cosh); derivatives alternate
            odd = (kind == 1) ^ (k % 2 == 1)
            out[k] += amp * p * (sh if odd else ch) * invfact[k]
            p *= md
        mag = abs(amp) * ch * (1 + abs(md)) ** order
        if prev is not None and mag < prev:
            peak_passed = True
        prev = mag
        if peak_passed and mag < tol * (1 + abs(out[0])):
            break
        n += 1
    return out


def theta_jet(kind, v, q, order, ctx: PrecisionContext, method="auto") -> TaylorJet:
    """Taylor jet of ``h -> theta_kind(v + h, q)`` up to ``order``.

    ``method`` is ``"auto"``, ``"direct"`` or ``"modular"``; auto switches to
    the modular form above ``ctx.modular_threshold``.
    """
    if kind not in (1, 2, 3, 4):
        raise ValueError(f"theta kind must be 1..4, got {kind}")
    if order < 0:
        raise ValueError("derivative order must be >= 0")
    mp = ctx.mp
    q = _check_nome(q, mp)
    if method == "auto":
        method = "modular" if q > ctx.modular_threshold else "direct"
    with mp.extraprec(_GUARD_BITS + 2 * order):
        v = mp.mpf(v)
        vr, sign = _reduce(kind, v, mp)
        tol = mp.mpf(ctx.series_tol) * mp.mpf(2) ** (-_GUARD_BITS)
        if method == "direct":
            coeffs = _direct_jet(kind, vr, q, order, mp, tol)
        elif method == "modular":
            s = -mp.log(q) / mp.pi
            qp = mp.exp(-mp.pi / s)
            series = TaylorJet(_dual_series_jet(kind, vr / s, 1 / s, qp, order, mp, tol))
            # exp(-(vr + h)^2 / (pi s)) as a jet
            u = TaylorJet.variable(vr, order, mp)
            gauss = (u * u * (-1 / (mp.pi * s))).exp(mp)
            coeffs = (series * gauss * (1 / mp.sqrt(s))).coeffs
        else:
            raise ValueError(f"unknown theta method {method!r}")
        coeffs = [sign * c for c in coeffs]
    return TaylorJet([+c for c in coeffs])


def theta(kind, v, q, deriv_order=0, ctx: PrecisionContext | None = None, method="auto"):
    """``d^n/dv^n theta_kind(v, q)`` for n = ``deriv_order``."""
    ctx = ctx or PrecisionContext()
    return theta_jet(kind, v, q, deriv_order, ctx, method).derivative_value(deriv_order)


def _theta1_zero_check(v, mp):
    r = v / mp.pi
    if r == mp.nint(r):
        raise PoleError(f"theta1 vanishes at v = {v}", location=v)


def log_deriv_theta1(v, q, ctx: PrecisionContext | None = None):
    """theta1'(v, q) / theta1(v, q)."""
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    v = mp.mpf(v)
    _theta1_zero_check(v, mp)
    j = theta_jet(1, v, q, 1, ctx)
    if j[0] == 0:
        raise PoleError(f"theta1 vanishes at v = {v}", location=v)
    return j[1] / j[0]


def log_deriv_theta1_jet(v, q, order, ctx: PrecisionContext, scale=1) -> TaylorJet:
    """Jet of ``h -> theta1'/theta1 (v + scale*h)``."""
    mp = ctx.mp
    v = mp.mpf(v)
    _theta1_zero_check(v, mp)
    j = theta_jet(1, v, q, order + 1, ctx)
    ratio = j.derivative() / j.truncate(order)
    return ratio.scale_argument(scale)


def log_deriv_theta4(v, q, ctx: PrecisionContext | None = None):
    """theta4'(v, q) / theta4(v, q); theta4 has no real zeros."""
    ctx = ctx or PrecisionContext()
    j = theta_jet(4, v, q, 1, ctx)
    return j[1] / j[0]


def theta_constants(q, ctx: PrecisionContext):
    """(theta2(0), theta3(0), theta4(0)) at nome q."""
    return tuple(theta_jet(k, 0, q, 0, ctx)[0] for k in (2, 3, 4))


def elliptic_K(q, ctx: PrecisionContext | None = None):
    """Complete elliptic integral K for the modulus of nome q: (pi/2) theta3(0)^2."""
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    t3 = theta_jet(3, 0, q, 0, ctx)[0]
    return mp.pi / 2 * t3**2


def elliptic_modulus(q, ctx: PrecisionContext | None = None):
    """Modulus k = theta2(0)^2 / theta3(0)^2."""
    ctx = ctx or PrecisionContext()
    t2, t3, _ = theta_constants(q, ctx)
    return (t2 / t3) ** 2


def jacobi_sn(u, q, ctx: PrecisionContext | None = None):
    """sn(u) for the modulus of nome q, as a theta quotient.

    sn(u) = theta3(0)/theta2(0) * theta1(v)/theta4(v) with v = pi u / (2K).
    theta4 has no zeros on the real line, so sn is pole-free for real u.
    """
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    u = mp.mpf(u)
    t2, t3, _ = theta_constants(q, ctx)
    K = mp.pi / 2 * t3**2
    v = mp.pi * u / (2 * K)
    t4v = theta_jet(4, v, q, 0, ctx)[0]
    if t4v == 0:
        raise PoleError(f"sn has a pole at u = {u}", location=u)
    return t3 / t2 * theta_jet(1, v, q, 0, ctx)[0] / t4v

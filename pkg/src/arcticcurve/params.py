"""Regimes, Boltzmann weights and the (Delta, t) <-> (lambda, eta) maps.

Anti-ferroelectric regime (Delta < -1)::

    a = sinh(eta - lambda),  b = sinh(eta + lambda),  c = sinh(2 eta),
    eta > 0,  -eta <= lambda <= eta,  Delta = -cosh(2 eta).

Disordered regime (-1 <= Delta < 1)::

    a = sin(lambda + eta),   b = sin(lambda - eta),   c = sin(2 eta),
    0 < eta <= pi/2,  eta <= lambda <= pi - eta,  Delta = cos(2 eta).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from .errors import (
    BoundaryRegimeError,
    DegenerateWeightError,
    FerroelectricUnsupportedError,
    ParameterDomainError,
)
from .precision import PrecisionContext, _mp_for

# domain checks only; independent of any caller's working precision
_DOMAIN_MP = _mp_for(1024)


class Regime(enum.Enum):
    DISORDERED = "disordered"
    ANTI_FERROELECTRIC = "anti-ferroelectric"

    @classmethod
    def from_delta(cls, delta) -> "Regime":
        if delta >= 1:
            raise FerroelectricUnsupportedError(
                f"Delta = {delta} lies in the ferroelectric regime, which is not supported"
            )
        if delta == -1:
            raise BoundaryRegimeError("Delta = -1 is the regime boundary; approach it as a limit")
        return cls.ANTI_FERROELECTRIC if delta < -1 else cls.DISORDERED


AF = Regime.ANTI_FERROELECTRIC
DIS = Regime.DISORDERED


@dataclass(frozen=True)
class PhasePoint:
    delta: Any
    t: Any

    def __post_init__(self):
        if not self.t > 0:
            raise ParameterDomainError(f"weight ratio t must be positive, got {self.t}")


@dataclass(frozen=True)
class Weights:
    a: Any
    b: Any
    c: Any


@dataclass(frozen=True)
class SpectralParams:
    """Rapidity ``lam`` and crossing parameter ``eta`` of a regime.

    The closed parameter domain is accepted (weights may vanish on its
    boundary); routines that need positive weights call
    :meth:`require_interior`.
    """

    lam: Any
    eta: Any
    regime: Regime

    def __post_init__(self):
        lam, eta = self.lam, self.eta
        if self.regime is AF:
            ok = eta > 0 and -eta <= lam <= eta
            rule = "eta > 0 and -eta <= lambda <= eta"
        else:
            pi = _DOMAIN_MP.pi
            ok = 0 < eta <= pi / 2 and eta <= lam <= pi - eta
            rule = "0 < eta <= pi/2 and eta <= lambda <= pi - eta"
        if not ok:
            raise ParameterDomainError(
                f"({self.regime.value}) lambda={lam}, eta={eta} violates {rule}"
            )

    def lam_interval(self, ctx: PrecisionContext):
        """Open interval of rapidities with strictly positive weights."""
        mp = ctx.mp
        eta = mp.mpf(self.eta)
        if self.regime is AF:
            return -eta, eta
        return eta, mp.pi - eta

    def is_interior_rapidity(self, lam, ctx: PrecisionContext) -> bool:
        lo, hi = self.lam_interval(ctx)
        return lo < lam < hi

    def require_interior(self, ctx: PrecisionContext):
        mp = ctx.mp
        if not self.is_interior_rapidity(mp.mpf(self.lam), ctx):
            raise ParameterDomainError(
                f"lambda={self.lam} is on the boundary of the {self.regime.value} domain"
            )
        if self.regime is DIS and mp.mpf(self.eta) >= mp.pi / 2:
            raise BoundaryRegimeError("eta = pi/2 is the Delta = -1 boundary")


def weights_at(lam, p: SpectralParams, ctx: PrecisionContext) -> Weights:
    """Vertex weights of the regime of ``p`` at rapidity ``lam`` (same eta)."""
    mp = ctx.mp
    lam, eta = mp.mpf(lam), mp.mpf(p.eta)
    if p.regime is AF:
        return Weights(mp.sinh(eta - lam), mp.sinh(eta + lam), mp.sinh(2 * eta))
    return Weights(mp.sin(lam + eta), mp.sin(lam - eta), mp.sin(2 * eta))


def weights_from_spectral(p: SpectralParams, ctx: PrecisionContext | None = None) -> Weights:
    ctx = ctx or PrecisionContext()
    return weights_at(p.lam, p, ctx)


def phase_from_spectral(p: SpectralParams, ctx: PrecisionContext | None = None) -> PhasePoint:
    """Delta = (a^2 + b^2 - c^2) / (2ab) and t = b/a."""
    ctx = ctx or PrecisionContext()
    w = weights_from_spectral(p, ctx)
    if w.a == 0 or w.b == 0:
        raise DegenerateWeightError(f"weight vanishes at lambda={p.lam}, eta={p.eta}")
    delta = (w.a**2 + w.b**2 - w.c**2) / (2 * w.a * w.b)
    return PhasePoint(delta=delta, t=w.b / w.a)


def spectral_from_phase(q: PhasePoint, ctx: PrecisionContext | None = None) -> SpectralParams:
    """Invert :func:`phase_from_spectral` at working precision."""
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    delta, t = mp.mpf(q.delta), mp.mpf(q.t)
    regime = Regime.from_delta(delta)
    if regime is AF:
        eta = mp.acosh(-delta) / 2
        lam = mp.atanh((t - 1) / (t + 1) * mp.tanh(eta))
    else:
        eta = mp.acos(delta) / 2
        # atan2 keeps lambda in (0, pi); t = 1 lands exactly on pi/2
        lam = mp.atan2((1 + t) * mp.sin(eta), (1 - t) * mp.cos(eta))
    return SpectralParams(lam=lam, eta=eta, regime=regime)


def crossing_reflect(p: SpectralParams, ctx: PrecisionContext | None = None) -> SpectralParams:
    """The a <-> b exchange: lambda -> -lambda (AF) or pi - lambda (disordered)."""
    if p.regime is AF:
        return SpectralParams(lam=-p.lam, eta=p.eta, regime=AF)
    ctx = ctx or PrecisionContext()
    return SpectralParams(lam=ctx.mp.pi - ctx.mp.mpf(p.lam), eta=p.eta, regime=DIS)


def params_from_phase(delta, t, ctx: PrecisionContext | None = None) -> SpectralParams:
    """Shorthand for ``spectral_from_phase(PhasePoint(delta, t))``."""
    return spectral_from_phase(PhasePoint(delta=delta, t=t), ctx)


def xi_max(p: SpectralParams, ctx: PrecisionContext | None = None):
    """Right end of the curve-parameter interval: eta - lambda (AF), pi - lambda - eta.

    It is where the weight a(lambda + xi) vanishes, i.e. the pole of the
    generating-function variable gamma(xi).
    """
    ctx = ctx or PrecisionContext()
    mp = ctx.mp
    lam, eta = mp.mpf(p.lam), mp.mpf(p.eta)
    if p.regime is AF:
        return eta - lam
    return mp.pi - lam - eta

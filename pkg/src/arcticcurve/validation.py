"""Acceptance checks P1..P8.

Every check returns a :class:`CheckResult` whose ``measured`` value is the
worst case over the parameter sets it visits. ``run_checks`` also counts the
precision escalations logged while the checks ran.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from typing import Callable

from . import arctic, finite_n
from .errors import ArcticError
from .params import params_from_phase, weights_from_spectral
from .precision import PrecisionContext

P1_SETS = ((-1.2, 0.5), (-2, 1), (-5, 2), (-20, 0.5), (-100, 1))
P2_SETS = ((0, 1), (0.5, 1), (-0.5, 2), (0.3, 0.5), (-0.9, 1.5))
P3_SETS = ((-2, 1), (-3, 0.7), (-5, 1.5))
P3_FRACTIONS = ("0.25", "0.5", "0.75")
P7_SETS = P1_SETS + P2_SETS
P8_SETS = ((-2, 1), (-3, 0.7), (0.3, 2), (-0.5, 1))
ASM_COUNTS = (1, 2, 7, 42, 429)


@dataclass
class CheckResult:
    check_id: str
    status: str
    measured: float
    tolerance: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self):
        return asdict(self)

    def line(self) -> str:
        return (
            f"{self.check_id}: {self.status.upper()} "
            f"(measured {self.measured:.3e}, tolerance {self.tolerance:.1e}) {self.detail}"
        ).rstrip()


def _result(check_id, measured, tol, detail="", ok=None):
    measured = float(measured)
    if ok is None:
        ok = measured <= tol
    return CheckResult(check_id, "pass" if ok else "fail", measured, float(tol), detail)


def _open_grid(top, n, mp):
    return [top * (i + mp.mpf(0.5)) / n for i in range(n)]


def check_p1(ctx: PrecisionContext) -> CheckResult:
    """AF resolvent roundtrip W(W^-1(xi)) = xi on a 100-point grid."""
    mp = ctx.mp
    worst = mp.zero
    for delta, t in P1_SETS:
        p = params_from_phase(delta, t, ctx)
        rp = arctic.resolvent_params(p, ctx)
        for xi in _open_grid(rp.xi_max, 100, mp):
            z = arctic.w_inverse_af(xi, p, ctx, rp=rp)
            branch = 1 if xi <= rp.xi_max / 2 else -1
            worst = max(worst, abs(arctic.w_forward_af(z, p, ctx, branch, rp) - xi))
    return _result("P1", worst, 1e-10, f"{len(P1_SETS)} AF sets x 100 points")


def check_p2(ctx: PrecisionContext) -> CheckResult:
    """Disordered W^-1: cot form vs tan quotient vs roundtrip through W(z)."""
    mp = ctx.mp
    worst = mp.zero
    for delta, t in P2_SETS:
        p = params_from_phase(delta, t, ctx)
        rp = arctic.resolvent_params(p, ctx)
        for xi in _open_grid(rp.xi_max, 40, mp):
            tan_form, cot_form = arctic.w_inverse_dis_forms(xi, p, ctx, rp)
            branch = 1 if xi <= rp.xi_max / 2 else -1
            back = arctic.w_forward_dis(cot_form, p, ctx, branch, rp)
            worst = max(worst, abs(tan_form - cot_form) / (1 + abs(cot_form)), abs(back - xi))
    return _result("P2", worst, 1e-10, f"{len(P2_SETS)} disordered sets")


def check_p3(ctx: PrecisionContext) -> CheckResult:
    """Finite-N log-derivative approaches its large-N limit: e(32) <= e(8)/2."""
    mp = ctx.mp
    worst = 0.0
    for delta, t in P3_SETS:
        p = params_from_phase(delta, t, ctx)
        rp = arctic.resolvent_params(p, ctx)
        for frac in P3_FRACTIONS:
            xi = rp.xi_max * mp.mpf(frac)
            limit = arctic.asymptotic_log_deriv(xi, p, ctx, rp)
            e8 = abs(finite_n.finite_log_deriv(8, p, xi, ctx) - limit)
            e32 = abs(finite_n.finite_log_deriv(32, p, xi, ctx) - limit)
            worst = max(worst, float(e32 / e8))
    return _result("P3", worst, 0.5, "worst e(32)/e(8)")


def check_p4(ctx: PrecisionContext) -> CheckResult:
    """Hankel determinant vs enumeration, generating function vs refined counts, ASMs."""
    mp = ctx.mp
    worst = mp.zero
    problems = []
    for delta, t in ((-3, 0.7), (-1.5, 2), (0.2, 1.3), (-0.6, 0.8)):
        p = params_from_phase(delta, t, ctx)
        for n in range(1, 7):
            spec = finite_n.InhomogeneousSpec.homogeneous(n, p.lam)
            z_det = finite_n.partition_hankel(n, p, ctx).value
            z_enum = finite_n.enumerate_partition(spec, p, ctx).value
            worst = max(worst, abs(z_det - z_enum) / abs(z_enum))
        xi = arctic.xi_max(p, ctx) / 3
        g = finite_n.gamma_map(xi, p, ctx)
        for n in range(1, 6):
            dist = finite_n.boundary_distribution(n, p, ctx)
            h = finite_n.h_generating(n, p, xi, ctx)
            worst = max(worst, abs(h - dist.generating(g)) / abs(h))
    counts = tuple(finite_n.asm_count(n) for n in range(1, 6))
    if counts != ASM_COUNTS:
        problems.append(f"ASM counts {counts}")
    p = params_from_phase(0.5, 1, ctx)
    for n, expected in enumerate(ASM_COUNTS, start=1):
        z = finite_n.partition_hankel(n, p, ctx)
        w = weights_from_spectral(p, ctx).c
        if mp.nint(z.value / w ** (n * n)) != expected:
            problems.append(f"Z_{n}/c^(n^2) != {expected}")
    ok = worst <= 1e-25 and not problems
    return _result("P4", worst, 1e-25, "; ".join(problems), ok=ok)


def check_p5(ctx: PrecisionContext) -> CheckResult:
    """Delta = 0, t = 1 gives the inscribed circle."""
    p = params_from_phase(0, 1, ctx)
    por = arctic.curve_portion(p, arctic.DEFAULT_POINTS, ctx)
    worst = max(abs((pt.x - 0.5) ** 2 + (pt.y - 0.5) ** 2 - 0.25) for pt in por.points)
    return _result("P5", worst, 1e-8, f"{len(por.points)} points")


def check_p6(ctx: PrecisionContext) -> CheckResult:
    """Delta = -1e4, t = 1: the portion is close to the segment x + y = 1/2."""
    p = params_from_phase(-10000, 1, ctx)
    por = arctic.curve_portion(p, arctic.DEFAULT_POINTS, ctx)
    worst = max(abs(pt.x + pt.y - 0.5) for pt in por.points)
    return _result("P6", worst, 1e-2, f"{len(por.points)} points")


def check_p7(ctx: PrecisionContext) -> CheckResult:
    """Endpoint gaps vanish, contacts are tangential and lie inside the sides."""
    worst_gap = 0.0
    worst_slope = 0.0
    problems = []
    for delta, t in P7_SETS:
        p = params_from_phase(delta, t, ctx)
        por = arctic.curve_portion(p, 16, ctx)
        worst_gap = max(worst_gap, float(abs(por.start_gap)), float(abs(por.end_gap)))
        worst_slope = max(worst_slope, float(abs(por.slope_start)), float(abs(por.slope_end)))
        if not 0 < por.contact_x < 1 or not 0 < por.contact_y < 1:
            problems.append(f"contact outside (0,1) at Delta={delta}, t={t}")
    ok = worst_gap <= 1e-8 and worst_slope <= 1e-4 and not problems
    detail = f"gap {worst_gap:.2e} (tol 1e-8), slope {worst_slope:.2e} (tol 1e-4)"
    if problems:
        detail += "; " + "; ".join(problems)
    return _result("P7", max(worst_gap / 1e-8, worst_slope / 1e-4), 1.0, detail, ok=ok)


def check_p8(ctx: PrecisionContext) -> CheckResult:
    """Curve-system residuals at emitted points, and t = 1 diagonal symmetry."""
    worst = 0.0
    for delta, t in P8_SETS:
        p = params_from_phase(delta, t, ctx)
        rp = arctic.resolvent_params(p, ctx)
        por = arctic.curve_portion(p, 64, ctx)
        for pt in por.points:
            f, fd = arctic.curve_residuals(pt, p, ctx, rp)
            worst = max(worst, float(abs(f)), float(abs(fd)))
    asym = arctic.diagonal_asymmetry(arctic.full_curve(params_from_phase(-2, 1, ctx), 64, ctx))
    ok = worst <= 1e-20 and asym <= 1e-8
    detail = f"residual {worst:.2e} (tol 1e-20), diagonal Hausdorff {asym:.2e} (tol 1e-8)"
    return _result("P8", max(worst / 1e-20, asym / 1e-8), 1.0, detail, ok=ok)


CHECKS: dict[str, Callable[[PrecisionContext], CheckResult]] = {
    "P1": check_p1,
    "P2": check_p2,
    "P3": check_p3,
    "P4": check_p4,
    "P5": check_p5,
    "P6": check_p6,
    "P7": check_p7,
    "P8": check_p8,
}


class _CountingHandler(logging.Handler):
    def __init__(self):
        super().__init__(logging.INFO)
        self.count = 0

    def emit(self, record):
        if "precision escalation" in record.getMessage():
            self.count += 1


def run_check(check_id: str, ctx: PrecisionContext | None = None) -> CheckResult:
    ctx = ctx or PrecisionContext()
    try:
        fn = CHECKS[check_id]
    except KeyError:
        raise ValueError(f"unknown check {check_id!r}; choose from {', '.join(CHECKS)}") from None
    try:
        return fn(ctx)
    except ArcticError as exc:
        return CheckResult(check_id, "fail", float("nan"), float("nan"), f"{type(exc).__name__}: {exc}")


def run_checks(only=None, ctx: PrecisionContext | None = None):
    """Run the selected checks; returns (results, escalation_count)."""
    ctx = ctx or PrecisionContext()
    ids = list(CHECKS) if not only else list(only)
    logger = logging.getLogger(finite_n.__name__)
    handler = _CountingHandler()
    old_level = logger.level
    logger.addHandler(handler)
    if logger.getEffectiveLevel() > logging.INFO:
        logger.setLevel(logging.INFO)
    try:
        results = [run_check(cid, ctx) for cid in ids]
    finally:
        logger.removeHandler(handler)
        logger.setLevel(old_level)
    return results, handler.count

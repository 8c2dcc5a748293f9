"""Command-line entry point: ``arcticcurve {curve,sweep,finite-n,enumerate,validate}``.

Exit codes: 0 success, 1 failed validation, 2 usage error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import arctic, finite_n, output, validation
from .errors import ArcticError, ParameterDomainError
from .params import params_from_phase, weights_from_spectral
from .precision import DEFAULT_BITS, ENV_BITS, PrecisionContext

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
FORMATS = ("csv", "json", "svg")


class UsageError(Exception):
    pass


def _default_bits():
    raw = os.environ.get(ENV_BITS)
    if raw is None:
        return DEFAULT_BITS
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_BITS}={raw!r} is not an integer") from None


def _context(args) -> PrecisionContext:
    bits = args.precision_bits if args.precision_bits is not None else _default_bits()
    if bits < 64:
        raise UsageError("--precision-bits must be at least 64")
    return PrecisionContext(bits=bits)


def _emit(text: str, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _portions(p, args, ctx):
    if args.portion == "all":
        return list(arctic.full_curve(p, args.n_points, ctx).portions)
    return [arctic.curve_portion(p, args.n_points, ctx)]


def _render(curves, labels, args, ctx):
    if args.format == "svg":
        return output.to_svg(curves, labels)
    flat = [por for portions in curves for por in portions]
    if args.format == "json":
        return output.to_json(flat, ctx)
    return output.to_csv(flat)


def cmd_curve(args) -> int:
    ctx = _context(args)
    p = params_from_phase(args.delta, args.t, ctx)
    portions = _portions(p, args, ctx)
    label = f"Delta={args.delta}, t={args.t}, {p.regime.value}"
    _emit(_render([portions], [label], args, ctx), args.output)
    return EXIT_OK


def cmd_sweep(args) -> int:
    ctx = _context(args)
    curves, labels = [], []
    for delta in args.deltas:
        p = params_from_phase(delta, args.t, ctx)
        curves.append(_portions(p, args, ctx))
        labels.append(f"Delta={delta}, t={args.t}, {p.regime.value}")
    _emit(_render(curves, labels, args, ctx), args.output)
    return EXIT_OK


def _report(lines, args):
    text = "\n".join(f"{k} = {v}" for k, v in lines) + "\n"
    _emit(text, args.output)


def cmd_finite_n(args) -> int:
    ctx = _context(args)
    p = params_from_phase(args.delta, args.t, ctx)
    mp = ctx.mp
    z = finite_n.partition_hankel(args.n, p, ctx).value
    c = weights_from_spectral(p, ctx).c
    rows = [
        ("N", args.n),
        ("Z_N", mp.nstr(z, 30)),
        ("Z_N / c^(N^2)", mp.nstr(z / c ** (args.n**2), 30)),
    ]
    if args.xi is not None:
        xi = mp.mpf(args.xi)
        rows.append(("h_N(gamma(xi))", mp.nstr(finite_n.h_generating(args.n, p, xi, ctx), 30)))
        rows.append(("(1/N) dlog h_N", mp.nstr(finite_n.finite_log_deriv(args.n, p, xi, ctx), 30)))
    _report(rows, args)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    ctx = _context(args)
    p = params_from_phase(args.delta, args.t, ctx)
    mp = ctx.mp
    spec = finite_n.InhomogeneousSpec.homogeneous(args.n, p.lam)
    z = finite_n.enumerate_partition(spec, p, ctx).value
    c = weights_from_spectral(p, ctx).c
    _report(
        [
            ("N", args.n),
            ("Z_N", mp.nstr(z, 30)),
            ("Z_N / c^(N^2)", mp.nstr(z / c ** (args.n**2), 30)),
        ],
        args,
    )
    return EXIT_OK


def cmd_validate(args) -> int:
    ctx = _context(args)
    only = args.only or None
    if only:
        unknown = [c for c in only if c not in validation.CHECKS]
        if unknown:
            raise UsageError(f"unknown check(s): {', '.join(unknown)}")
    results, escalations = validation.run_checks(only, ctx)
    for r in results:
        print(r.line(), file=sys.stderr)
    report = {
        "checks": [r.as_dict() for r in results],
        "precision_escalations": escalations,
        "passed": all(r.passed for r in results),
    }
    _emit(json.dumps(report, indent=2) + "\n", args.output)
    return EXIT_OK if report["passed"] else EXIT_FAILED


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision-bits", type=int, default=None,
                        help=f"working precision (default ${ENV_BITS} or {DEFAULT_BITS})")
    common.add_argument("--output", "-o", default=None, help="output file (default stdout)")
    common.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS)

    phase = argparse.ArgumentParser(add_help=False)
    phase.add_argument("--t", type=float, default=1.0, help="weight ratio b/a (default 1)")

    def curve_opts(default_format):
        # a fresh parent per subcommand: parent actions are shared objects
        opts = argparse.ArgumentParser(add_help=False)
        opts.add_argument("--n-points", type=_positive_int, default=arctic.DEFAULT_POINTS)
        opts.add_argument("--portion", choices=("first", "all"), default="first")
        opts.add_argument("--format", choices=FORMATS, default=default_format)
        return opts

    parser = argparse.ArgumentParser(
        prog="arcticcurve",
        description="Arctic curves of the six-vertex model with domain-wall boundaries.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve", parents=[common, phase, curve_opts("csv")], help="one curve")
    p.add_argument("--delta", type=float, required=True)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("sweep", parents=[common, phase, curve_opts("svg")], help="several Delta values")
    p.add_argument("--deltas", type=float, nargs="+", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("finite-n", parents=[common, phase], help="Z_N from the Hankel determinant")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--xi", type=float, default=None, help="also evaluate h_N and its log-derivative")
    p.set_defaults(func=cmd_finite_n)

    p = sub.add_parser("enumerate", parents=[common, phase], help="Z_N by exact enumeration")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("validate", parents=[common], help="run the acceptance checks")
    p.add_argument("--only", nargs="+", default=None, metavar="CHECK")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    logging.basicConfig(
        level=logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (UsageError, ParameterDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArcticError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"numeric failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())

"""CSV, JSON and SVG writers for curve portions.

All three are deterministic: the same curve always serialises to the same
bytes. CSV carries 20 significant digits; JSON numbers are IEEE doubles.
"""

from __future__ import annotations

import csv
import io
import json

from .arctic import CurvePortion
from .params import phase_from_spectral
from .precision import PrecisionContext, _mp_for

CSV_DIGITS = 20
CSV_HEADER = ("xi", "x", "y")
SVG_MARGIN = 0.05
# formatting needs only ~20 digits, but must not round 256-bit inputs early
_FMT_MP = _mp_for(512)
_SVG_COLORS = ("#1f4e79", "#b03a2e", "#1e8449", "#7d3c98", "#b9770e", "#117a65")


def format_number(value, digits: int = CSV_DIGITS) -> str:
    """Scientific notation with exactly ``digits`` significant digits."""
    mant_digits = digits - 1
    v = _FMT_MP.mpf(value)
    if v == 0:
        return f"{0:.{mant_digits}e}"
    s = _FMT_MP.nstr(v, digits, min_fixed=1, max_fixed=0, strip_zeros=False)
    mant, _, exp = s.partition("e")
    if "." not in mant:
        mant += "."
    whole, frac = mant.split(".")
    frac = (frac + "0" * mant_digits)[:mant_digits]
    e = int(exp or 0)
    return f"{whole}.{frac}e{'-' if e < 0 else '+'}{abs(e):02d}"


def portion_rows(portion: CurvePortion):
    return [(pt.xi, pt.x, pt.y) for pt in portion.points]


def to_csv(portions, digits: int = CSV_DIGITS) -> str:
    """Header ``xi,x,y`` followed by the points of each portion in order."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for portion in portions:
        for row in portion_rows(portion):
            w.writerow([format_number(v, digits) for v in row])
    return buf.getvalue()


def read_csv(text: str):
    """Parse CSV emitted by :func:`to_csv` into (xi, x, y) string triples."""
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    return [tuple(row) for row in reader]


def _params_block(portion: CurvePortion, ctx: PrecisionContext):
    p = portion.params
    phase = phase_from_spectral(p, ctx)
    return {
        "delta": float(phase.delta),
        "t": float(phase.t),
        "lambda": float(p.lam),
        "eta": float(p.eta),
        "regime": p.regime.value,
    }


def _contact_block(portion: CurvePortion):
    horiz, vert = portion.contact_points()
    return {
        "x_axis": [float(horiz[0]), float(horiz[1])],
        "y_axis": [float(vert[0]), float(vert[1])],
    }


def _points_block(portion: CurvePortion):
    return [{"xi": float(pt.xi), "x": float(pt.x), "y": float(pt.y)} for pt in portion.points]


def to_json(portions, ctx: PrecisionContext | None = None) -> str:
    """``{params, contact, points}`` of the first portion; with several
    portions, a ``portions`` list repeats the block per corner."""
    ctx = ctx or PrecisionContext()
    portions = list(portions)
    first = portions[0]
    doc = {
        "params": _params_block(first, ctx),
        "contact": _contact_block(first),
        "points": _points_block(first),
    }
    if len(portions) > 1:
        doc["portions"] = [
            {
                "corner": list(por.corner),
                "params": _params_block(por, ctx),
                "contact": _contact_block(por),
                "points": _points_block(por),
            }
            for por in portions
        ]
    return json.dumps(doc, indent=2) + "\n"


def _fmt(v: float) -> str:
    return f"{v:.6f}"


def to_svg(curves, labels=None, size: int = 480) -> str:
    """Render one or more curves in the unit square.

    ``curves`` is a list whose items are lists of portions (one item per
    curve, drawn in its own colour). Contact points are marked with dots.
    The y axis points up.
    """
    lo, span = -SVG_MARGIN, 1 + 2 * SVG_MARGIN
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{_fmt(lo)} {_fmt(lo)} {_fmt(span)} {_fmt(span)}">',
        '<g transform="matrix(1 0 0 -1 0 1)">',
        '<rect x="0" y="0" width="1" height="1" fill="none" stroke="#000000" stroke-width="0.004"/>',
    ]
    for idx, portions in enumerate(curves):
        color = _SVG_COLORS[idx % len(_SVG_COLORS)]
        title = f"<title>{labels[idx]}</title>" if labels else ""
        out.append(f'<g stroke="{color}" fill="none" stroke-width="0.004">{title}')
        for por in portions:
            pts = [(float(pt.x), float(pt.y)) for pt in por.points]
            horiz, vert = por.contact_points()
            path = [(float(horiz[0]), float(horiz[1]))] + pts + [(float(vert[0]), float(vert[1]))]
            d = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in path)
            out.append(f'<polyline points="{d}"/>')
            for cx, cy in (horiz, vert):
                out.append(
                    f'<circle cx="{_fmt(float(cx))}" cy="{_fmt(float(cy))}" r="0.008" '
                    f'fill="{color}" stroke="none"/>'
                )
        out.append("</g>")
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""Rendering of depth reports: CSV, JSON, a console table and an SVG plot.

All renderers are pure functions of their inputs, so identical reports give
byte-identical output.
"""

from __future__ import annotations

import json

from .exceptions import OutOfRange

REPORT_FORMATS = ("csv", "json")


def emit_report(report, format="csv"):
    """Serialize a depth report to CSV or JSON text.

    CSV has columns id, depth, rank with depths rounded to six decimals.
    JSON carries the method metadata and full-precision depths.
    """
    if format == "csv":
        lines = ["id,depth,rank"]
        for i, d, k in zip(report.ids, report.depths, report.ranks):
            lines.append(f"{i},{d:.6f},{k:g}")
        return "\n".join(lines) + "\n"
    if format == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    raise OutOfRange(f"unknown report format {format!r}")


def format_table(report):
    """Human-readable table with four-decimal depths; the deepest row is starred."""
    width = max([len("id")] + [len(i) for i in report.ids])
    top = max(report.depths)
    lines = [f"{'id':<{width}}  {'depth':>7}  {'rank':>5}"]
    for i, d, k in zip(report.ids, report.depths, report.ranks):
        star = " *" if d == top else ""
        lines.append(f"{i:<{width}}  {d:7.4f}  {k:5g}{star}")
    return "\n".join(lines) + "\n"


def _rank_color(rank, n):
    """Stroke color interpolated from red (rank 1) to blue (rank n)."""
    if n <= 1:
        t = 0.0
    else:
        t = (rank - 1.0) / (n - 1.0)
    red = round(255 * (1.0 - t))
    blue = round(255 * t)
    return f"#{red:02x}00{blue:02x}"


def emit_svg(records, report, width=640, height=360):
    """Plot trapezoidal membership functions colored by depth rank.

    Each record becomes one polyline through (a, 0), (b, 1), (c, 1), (d, 0)
    in data coordinates, stroked from red for the deepest record to blue for
    the shallowest.  The output is well-formed XML.
    """
    if len(records) != len(report.ids):
        raise OutOfRange("records and report rows must correspond")
    margin = 40.0
    x_min = min(rec.a for rec in records)
    x_max = max(rec.d for rec in records)
    span = x_max - x_min or 1.0
    x_min -= 0.05 * span
    x_max += 0.05 * span

    def sx(x):
        return margin + (x - x_min) / (x_max - x_min) * (width - 2 * margin)

    def sy(mu):
        return height - margin - mu * (height - 2 * margin)

    n = len(records)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{sy(0)}" x2="{width - margin}" y2="{sy(0)}" '
        'stroke="#444" stroke-width="1"/>',
        f'<line x1="{margin}" y1="{sy(0)}" x2="{margin}" y2="{sy(1)}" '
        'stroke="#444" stroke-width="1"/>',
        f'<text x="{margin}" y="{sy(1) - 8:.6g}" font-size="11" fill="#444">membership</text>',
        f'<text x="{width - margin}" y="{sy(0) + 24:.6g}" font-size="11" fill="#444" '
        'text-anchor="end">value</text>',
    ]
    for rec, rank in zip(records, report.ranks):
        color = _rank_color(rank, n)
        points = " ".join(
            f"{sx(x):.3f},{sy(mu):.3f}"
            for x, mu in ((rec.a, 0.0), (rec.b, 1.0), (rec.c, 1.0), (rec.d, 0.0))
        )
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="{color}" '
            f'stroke-width="2"><title>{rec.id}</title></polyline>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

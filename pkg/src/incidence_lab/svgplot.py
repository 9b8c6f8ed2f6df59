"""Deterministic SVG rendering of a configuration and its determined lines.

This is the only place non-exact arithmetic is allowed: line clipping
against the padded bounding box is done in exact rationals, and only the
final pixel coordinates pass through a fixed 6-decimal float formatting.
Nothing here feeds back into any analysis.
"""

from __future__ import annotations

from fractions import Fraction

from .arrangement import ArrangementStats, Configuration

__all__ = ["render_svg"]

_RICH_PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf")


def _style(r: int) -> tuple[str, str]:
    if r == 2:
        return "#9e9e9e", "1.0"
    return _RICH_PALETTE[(r - 3) % len(_RICH_PALETTE)], "2.2"


def _clip_line(a: int, b: int, c: int, x0, x1, y0, y1):
    """Exact intersection segment of a*x + b*y + c = 0 with the box."""
    hits = set()
    if b != 0:
        for x in (x0, x1):
            y = Fraction(-(c + a * x), b)
            if y0 <= y <= y1:
                hits.add((x, y))
    if a != 0:
        for y in (y0, y1):
            x = Fraction(-(c + b * y), a)
            if x0 <= x <= x1:
                hits.add((x, y))
    if len(hits) < 2:
        return None
    ordered = sorted(hits)
    return ordered[0], ordered[-1]


def render_svg(
    config: Configuration,
    stats: ArrangementStats,
    width: int = 640,
    rich_min: int = 2,
) -> str:
    """Render points and lines with r-keyed styling and an l_r legend.

    Lines with fewer than rich_min points are omitted.  Output bytes are a
    pure function of the inputs.
    """
    affine = [p.affine() for p in config.points]
    min_x = min(x for x, _ in affine)
    max_x = max(x for x, _ in affine)
    min_y = min(y for _, y in affine)
    max_y = max(y for _, y in affine)
    span = max(max_x - min_x, max_y - min_y, Fraction(1))
    pad = span / 8
    x0, x1 = min_x - pad, max_x + pad
    y0, y1 = min_y - pad, max_y + pad
    scale = Fraction(width) / (x1 - x0)
    height = max(1, round(float((y1 - y0) * scale)))

    def px(x: Fraction) -> str:
        return f"{float((x - x0) * scale):.6f}"

    def py(y: Fraction) -> str:
        return f"{float((y1 - y) * scale):.6f}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    ]
    for line, members in stats.lines:
        r = len(members)
        if r < rich_min:
            continue
        segment = _clip_line(line.a, line.b, line.c, x0, x1, y0, y1)
        if segment is None:
            continue
        (sx, sy), (ex, ey) = segment
        color, stroke = _style(r)
        parts.append(
            f'<line x1="{px(sx)}" y1="{py(sy)}" x2="{px(ex)}" y2="{py(ey)}" '
            f'stroke="{color}" stroke-width="{stroke}"/>'
        )
    for x, y in affine:
        parts.append(f'<circle cx="{px(x)}" cy="{py(y)}" r="3" fill="#000000"/>')
    for i, (r, count) in enumerate(sorted(stats.histogram.items())):
        color, _ = _style(r)
        parts.append(
            f'<text x="8" y="{16 + 14 * i}" font-family="monospace" '
            f'font-size="12" fill="{color}">l_{r} = {count}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

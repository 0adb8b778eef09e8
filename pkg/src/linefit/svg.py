"""SVG rendering of a point set and its fitted lines.

Fixed 800x600 viewport, equal-aspect scaling with a 5% margin.  Equal aspect
is mandatory: stretching one axis would visually misrepresent perpendicular
offsets.  Line styles follow the usual convention here: dotted for the
vertical-offset fit, dashed for the horizontal-offset fit, solid for the
perpendicular fit.  A degenerate perpendicular fit is drawn as a marked
centroid with a note, not as a line.
"""

from __future__ import annotations

import math
from typing import Sequence

from .fitters import AllLinesThroughCentroid, UniqueLine
from .geometry import NormalLine

__all__ = ["render_svg"]

WIDTH = 800.0
HEIGHT = 600.0
MARGIN_FRACTION = 0.05

_STYLES = {
    "Y": ('stroke="#1f77b4" stroke-dasharray="2 6"', "vertical-offset fit (dotted)"),
    "X": ('stroke="#d62728" stroke-dasharray="12 8"', "horizontal-offset fit (dashed)"),
    "D": ('stroke="#000000"', "perpendicular fit (solid)"),
}


class _Frame:
    """Data-to-pixel mapping with equal aspect and a margin."""

    def __init__(self, points: Sequence[tuple[float, float]]):
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        self.cx = 0.5 * (max(xs) + min(xs))
        self.cy = 0.5 * (max(ys) + min(ys))
        span_x = max(xs) - min(xs)
        span_y = max(ys) - min(ys)
        usable_w = WIDTH * (1.0 - 2.0 * MARGIN_FRACTION)
        usable_h = HEIGHT * (1.0 - 2.0 * MARGIN_FRACTION)
        span_x = max(span_x, 1e-9)
        span_y = max(span_y, 1e-9)
        self.scale = min(usable_w / span_x, usable_h / span_y)
        # data rectangle actually visible in the viewport
        self.x_lo = self.cx - 0.5 * WIDTH / self.scale
        self.x_hi = self.cx + 0.5 * WIDTH / self.scale
        self.y_lo = self.cy - 0.5 * HEIGHT / self.scale
        self.y_hi = self.cy + 0.5 * HEIGHT / self.scale

    def to_pixel(self, x: float, y: float) -> tuple[float, float]:
        return (
            0.5 * WIDTH + (x - self.cx) * self.scale,
            0.5 * HEIGHT - (y - self.cy) * self.scale,
        )


def _clip_line(line: NormalLine, frame: _Frame):
    """Endpoints of the visible segment of an infinite line, or None."""
    si, co = math.sin(line.theta), math.cos(line.theta)
    px, py = line.c * si, -line.c * co  # closest point to the origin
    t_lo, t_hi = -math.inf, math.inf
    for pos, d, lo, hi in (
        (px, co, frame.x_lo, frame.x_hi),
        (py, si, frame.y_lo, frame.y_hi),
    ):
        if abs(d) < 1e-15:
            if not (lo <= pos <= hi):
                return None
            continue
        t0, t1 = (lo - pos) / d, (hi - pos) / d
        if t0 > t1:
            t0, t1 = t1, t0
        t_lo, t_hi = max(t_lo, t0), min(t_hi, t1)
    if t_lo >= t_hi:
        return None
    return (px + t_lo * co, py + t_lo * si), (px + t_hi * co, py + t_hi * si)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_svg(
    points: Sequence[tuple[float, float]],
    fits: Sequence[tuple[str, object]],
) -> str:
    """Build the SVG document.

    ``fits`` holds (method, outcome) pairs where the outcome is a NormalLine,
    a UniqueLine, an AllLinesThroughCentroid, or None for a method that could
    not be fitted.
    """
    frame = _Frame(points)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH:.0f}" height="{HEIGHT:.0f}" '
        f'viewBox="0 0 {WIDTH:.0f} {HEIGHT:.0f}">',
        f'<rect width="{WIDTH:.0f}" height="{HEIGHT:.0f}" fill="#ffffff"/>',
    ]
    legend_row = 0
    for method, outcome in fits:
        if outcome is None:
            continue
        style, label = _STYLES[method]
        if isinstance(outcome, UniqueLine):
            outcome = outcome.line
        if isinstance(outcome, AllLinesThroughCentroid):
            cx, cy = frame.to_pixel(outcome.centroid.x, outcome.centroid.y)
            parts.append(
                f'<circle class="centroid-marker" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
                f'r="7" fill="none" stroke="#000000" stroke-width="2"/>'
            )
            parts.append(
                f'<text x="{_fmt(cx + 12)}" y="{_fmt(cy - 8)}" font-size="14">'
                "every line through the centroid fits equally well</text>"
            )
            label = "perpendicular fit: degenerate (marked centroid)"
        elif isinstance(outcome, NormalLine):
            seg = _clip_line(outcome, frame)
            if seg is not None:
                (x0, y0), (x1, y1) = seg
                px0, py0 = frame.to_pixel(x0, y0)
                px1, py1 = frame.to_pixel(x1, y1)
                parts.append(
                    f'<path class="fit-{method.lower()}" '
                    f'd="M {_fmt(px0)} {_fmt(py0)} L {_fmt(px1)} {_fmt(py1)}" '
                    f'fill="none" stroke-width="2" {style}/>'
                )
        else:
            raise TypeError(f"cannot render fit outcome {outcome!r}")
        parts.append(
            f'<text x="12" y="{20 + 18 * legend_row}" font-size="13">'
            f"{method}: {label}</text>"
        )
        legend_row += 1
    for x, y in points:
        px, py = frame.to_pixel(x, y)
        parts.append(
            f'<circle class="data-point" cx="{_fmt(px)}" cy="{_fmt(py)}" '
            f'r="3" fill="#444444"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)

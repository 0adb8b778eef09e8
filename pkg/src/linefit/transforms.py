"""Rigid motions of point sets and lines, and invariance reports.

Translating the data translates every fitted line the same way, for all three
methods.  Rotating the data rotates only the perpendicular-distance line the
same way; the vertical- and horizontal-offset lines generally end up somewhere
else.  ``invariance_report`` quantifies that: it compares the line fitted to
the moved data against the moved original line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import LineFitError
from .fitters import (
    AllLinesThroughCentroid,
    UniqueLine,
    fit_d,
    fit_x,
    fit_y,
)
from .geometry import (
    NormalLine,
    Point,
    inverse_slope_to_normal,
    normal_to_inverse_slope,
    normal_to_slope,
    slope_to_normal,
)
from .stats import PairedSample

__all__ = [
    "Translation",
    "Rotation",
    "RigidMotion",
    "InvarianceReport",
    "apply_motion_point",
    "apply_motion_points",
    "transform_line",
    "line_discrepancy",
    "invariance_report",
]

METHODS = ("Y", "X", "D")


@dataclass(frozen=True)
class Translation:
    u: float
    v: float


@dataclass(frozen=True)
class Rotation:
    """Rotation by ``phi`` about ``center``.

    ``center=None`` means "the centroid of whatever sample this motion is
    applied to"; operations without a sample in hand (``transform_line``)
    require an explicit center.
    """

    phi: float
    center: Point | None = None


RigidMotion = Union[Translation, Rotation]


def _resolve_center(g: RigidMotion, p: PairedSample) -> RigidMotion:
    if isinstance(g, Rotation) and g.center is None:
        n = p.n
        return Rotation(g.phi, Point(sum(p.xs.values) / n, sum(p.ys.values) / n))
    return g


def apply_motion_point(pt: Point, g: RigidMotion) -> Point:
    if isinstance(g, Translation):
        return Point(pt.x + g.u, pt.y + g.v)
    if g.center is None:
        raise ValueError("rotation of a bare point needs an explicit center")
    co, si = math.cos(g.phi), math.sin(g.phi)
    dx, dy = pt.x - g.center.x, pt.y - g.center.y
    return Point(g.center.x + dx * co - dy * si, g.center.y + dx * si + dy * co)


def apply_motion_points(p: PairedSample, g: RigidMotion) -> PairedSample:
    """Move every point of the sample; rotation defaults to the centroid."""
    g = _resolve_center(g, p)
    if isinstance(g, Translation):
        return PairedSample.from_xy(
            (x + g.u for x in p.xs.values), (y + g.v for y in p.ys.values)
        )
    co, si = math.cos(g.phi), math.sin(g.phi)
    cx, cy = g.center.x, g.center.y
    xs, ys = [], []
    for x, y in zip(p.xs.values, p.ys.values):
        dx, dy = x - cx, y - cy
        xs.append(cx + dx * co - dy * si)
        ys.append(cy + dx * si + dy * co)
    return PairedSample.from_xy(xs, ys)


def transform_line(line: NormalLine, g: RigidMotion) -> NormalLine:
    """Image of the line under the motion, renormalized into (-pi/2, pi/2].

    Translation by (u, v) keeps theta and maps c to c + u*sin(theta) -
    v*cos(theta); rotation by phi adds phi to theta and, about the origin,
    keeps c.
    """
    if isinstance(g, Translation):
        return NormalLine.canonical(
            line.theta,
            line.c + g.u * math.sin(line.theta) - g.v * math.cos(line.theta),
        )
    if g.center is None:
        raise ValueError(
            "transform_line has no sample to take a centroid from; "
            "construct the Rotation with an explicit center"
        )
    cx, cy = g.center.x, g.center.y
    # conjugate by the translation that moves the center to the origin
    c_at_origin = line.c - cx * math.sin(line.theta) + cy * math.cos(line.theta)
    theta = line.theta + g.phi
    c = c_at_origin + cx * math.sin(theta) - cy * math.cos(theta)
    return NormalLine.canonical(theta, c)


def line_discrepancy(a: NormalLine, b: NormalLine) -> float:
    """|sin(theta_a - theta_b)| + |c_a - c_b'|, zero iff the point sets coincide.

    c_b is re-signed when the two canonical representatives sit on opposite
    sides of the angle range (the same geometric line with orientation
    flipped), so near-vertical comparisons stay continuous.
    """
    dt = a.theta - b.theta
    cb = b.c if math.cos(dt) >= 0.0 else -b.c
    return abs(math.sin(dt)) + abs(a.c - cb)


STATUS_OK = "ok"
STATUS_ORIGINAL_FIT_NONEXISTENT = "original-fit-nonexistent"
STATUS_TRANSFORMED_FIT_NONEXISTENT = "transformed-fit-nonexistent"
STATUS_EXPECTED_NOT_REPRESENTABLE = "expected-line-not-representable"


@dataclass(frozen=True)
class InvarianceReport:
    """Outcome of the fit-then-move vs move-then-fit comparison.

    ``discrepancy`` is present only for status "ok".  For the D method a pair
    of degenerate outcomes compares centroids; a degenerate/unique mismatch
    reports an infinite discrepancy.
    """

    method: str
    motion: RigidMotion
    status: str
    line_from_transformed_data: object | None = None
    expected_if_invariant: object | None = None
    discrepancy: float | None = None


def _fit_natural(p: PairedSample, method: str):
    if method == "Y":
        return fit_y(p).line
    if method == "X":
        return fit_x(p).line
    if method == "D":
        return fit_d(p)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def invariance_report(p: PairedSample, g: RigidMotion, method: str) -> InvarianceReport:
    """Fit the moved sample and compare against the moved original fit.

    Fit preconditions that fail (vertical data for Y, horizontal for X) are
    recorded in the report status, never raised.
    """
    g = _resolve_center(g, p)
    moved = apply_motion_points(p, g)
    try:
        original = _fit_natural(p, method)
    except LineFitError:
        return InvarianceReport(method, g, STATUS_ORIGINAL_FIT_NONEXISTENT)
    try:
        actual = _fit_natural(moved, method)
    except LineFitError:
        return InvarianceReport(method, g, STATUS_TRANSFORMED_FIT_NONEXISTENT)

    if method == "D":
        return _d_report(g, method, original, actual)

    to_normal = slope_to_normal if method == "Y" else inverse_slope_to_normal
    from_normal = normal_to_slope if method == "Y" else normal_to_inverse_slope
    expected_normal = transform_line(to_normal(original), g)
    try:
        expected_natural = from_normal(expected_normal)
    except LineFitError:
        return InvarianceReport(
            method,
            g,
            STATUS_EXPECTED_NOT_REPRESENTABLE,
            line_from_transformed_data=actual,
        )
    return InvarianceReport(
        method,
        g,
        STATUS_OK,
        line_from_transformed_data=actual,
        expected_if_invariant=expected_natural,
        discrepancy=line_discrepancy(to_normal(actual), expected_normal),
    )


def _d_report(g, method, original, actual) -> InvarianceReport:
    if isinstance(original, UniqueLine):
        expected: object = transform_line(original.line, g)
    else:
        expected = AllLinesThroughCentroid(
            apply_motion_point(original.centroid, g), original.objective
        )
    if isinstance(actual, UniqueLine) and isinstance(expected, NormalLine):
        disc = line_discrepancy(actual.line, expected)
    elif isinstance(actual, AllLinesThroughCentroid) and isinstance(
        expected, AllLinesThroughCentroid
    ):
        disc = math.hypot(
            actual.centroid.x - expected.centroid.x,
            actual.centroid.y - expected.centroid.y,
        )
    else:
        disc = math.inf
    return InvarianceReport(
        method,
        g,
        STATUS_OK,
        line_from_transformed_data=actual,
        expected_if_invariant=expected,
        discrepancy=disc,
    )

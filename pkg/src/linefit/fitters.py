"""The three least-squares line fits.

* ``fit_y`` minimizes mean squared vertical offsets; needs var(x) > 0.
* ``fit_x`` minimizes mean squared horizontal offsets; needs var(y) > 0.
* ``fit_d`` minimizes mean squared perpendicular distances; always solvable,
  but when var(x) = var(y) and cov(x, y) = 0 every line through the centroid
  attains the same objective and a line family is returned instead of a line.

All minimizers are closed forms in the summary statistics.  The angle of the
perpendicular fit satisfies tan(2*theta) = 2*cov / (var_x - var_y); resolving
theta itself splits into six sign cases plus the isotropic family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import DegenerateCaseError, HorizontalDataError, VerticalDataError
from .geometry import InverseSlopeLine, NormalLine, Point, SlopeInterceptLine
from .stats import PairedSample, SummaryStats, summarize

__all__ = [
    "CASE_TAGS",
    "ISOTROPIC",
    "OrthogonalCase",
    "UniqueLine",
    "AllLinesThroughCentroid",
    "OrthogonalFit",
    "FitReport",
    "iso_tolerance",
    "resolve_case",
    "trig_from_case",
    "fit_y",
    "fit_x",
    "fit_d",
    "fit_d_report",
    "objective_y",
    "objective_x",
    "objective_d",
]

ISOTROPIC = "Isotropic"
CASE_TAGS = ("I", "II", "III", "IV", "V", "VI", ISOTROPIC)

_QUARTER_PI = math.pi / 4.0
_HALF_PI = math.pi / 2.0
_INV_SQRT2 = math.sqrt(0.5)


@dataclass(frozen=True)
class OrthogonalCase:
    """Sign-pattern case of the perpendicular fit.

    ``e_ratio`` is 2*cov / (var_x - var_y); it is present exactly for cases
    I..IV, where the variances differ.
    """

    tag: str
    e_ratio: float | None = None

    def __post_init__(self):
        if self.tag not in CASE_TAGS:
            raise ValueError(f"unknown case tag {self.tag!r}")


@dataclass(frozen=True)
class UniqueLine:
    line: NormalLine
    case: OrthogonalCase


@dataclass(frozen=True)
class AllLinesThroughCentroid:
    """Isotropic outcome: every line through the centroid shares the objective."""

    centroid: Point
    objective: float


OrthogonalFit = Union[UniqueLine, AllLinesThroughCentroid]


@dataclass(frozen=True)
class FitReport:
    """A fitted line bundled with its optimal objective and the input stats."""

    method: str  # "Y", "X" or "D"
    line: Union[SlopeInterceptLine, InverseSlopeLine, UniqueLine, AllLinesThroughCentroid]
    objective_min: float
    stats: SummaryStats


def iso_tolerance(s: SummaryStats) -> float:
    """Scale-aware threshold for treating var_x = var_y and cov = 0 as exact."""
    return 1e-12 * (s.var_x + s.var_y + 1.0)


# The x-spread precondition must reject exact vertical data yet accept merely
# near-vertical data, so the threshold is tiny: the stats layer guarantees
# var = 0.0 exactly for constant coordinates.
_SPREAD_TOL = 1e-300


def _has_x_spread(s: SummaryStats) -> bool:
    return s.var_x > _SPREAD_TOL * s.mean_xx


def _has_y_spread(s: SummaryStats) -> bool:
    return s.var_y > _SPREAD_TOL * s.mean_yy


def fit_y(p: PairedSample) -> FitReport:
    """Vertical-offset fit y = m*x + b with m = cov/var_x, b = mean_y - m*mean_x."""
    s = summarize(p)
    if not _has_x_spread(s):
        raise VerticalDataError(
            "vertical-offset fit requires var(x) > 0; all x coordinates "
            f"coincide (var_x={s.var_x!r}), the points lie on a vertical line"
        )
    m = s.cov_xy / s.var_x
    b = s.mean_y - m * s.mean_x
    objective = max(0.0, (s.var_x * s.var_y - s.cov_xy**2) / s.var_x)
    return FitReport("Y", SlopeInterceptLine(m, b), objective, s)


def fit_x(p: PairedSample) -> FitReport:
    """Horizontal-offset fit x = mu*y + beta; the Y fit with axes swapped."""
    s = summarize(p)
    if not _has_y_spread(s):
        raise HorizontalDataError(
            "horizontal-offset fit requires var(y) > 0; all y coordinates "
            f"coincide (var_y={s.var_y!r}), the points lie on a horizontal line"
        )
    mu = s.cov_xy / s.var_y
    beta = s.mean_x - mu * s.mean_y
    objective = max(0.0, (s.var_x * s.var_y - s.cov_xy**2) / s.var_y)
    return FitReport("X", InverseSlopeLine(mu, beta), objective, s)


def resolve_case(s: SummaryStats, tolerance: float | None = None) -> OrthogonalCase:
    """Classify the sign pattern of (var_x - var_y, cov_xy).

    Ties at cov = 0 resolve toward cases I and III (the competing case gives
    the same line there, but dispatch must be deterministic).  Equality of the
    variances is judged against ``tolerance`` (default :func:`iso_tolerance`).
    """
    tol = iso_tolerance(s) if tolerance is None else tolerance
    diff = s.var_x - s.var_y
    cov = s.cov_xy
    if abs(diff) <= tol:
        if abs(cov) <= tol:
            return OrthogonalCase(ISOTROPIC)
        return OrthogonalCase("V" if cov > 0.0 else "VI")
    e_ratio = 2.0 * cov / diff
    if diff > 0.0:
        return OrthogonalCase("I" if cov >= 0.0 else "II", e_ratio)
    return OrthogonalCase("III" if cov >= 0.0 else "IV", e_ratio)


def trig_from_case(case: OrthogonalCase) -> tuple[float, float, float]:
    """Closed-form (cos(theta), sin(theta), theta) for a non-isotropic case.

    With r = sqrt(1 + E^2), the two radicals reduce to sqrt((r+1)/(2r)) and
    |E|/sqrt(2r(r+1)); the second form avoids the catastrophic cancellation
    the textbook expression sqrt((1+E^2-r) / (2(1+E^2))) suffers for small |E|.
    """
    tag = case.tag
    if tag == ISOTROPIC:
        raise DegenerateCaseError(
            "isotropic statistics admit every angle; no single theta exists"
        )
    if tag == "V":
        return (_INV_SQRT2, _INV_SQRT2, _QUARTER_PI)
    if tag == "VI":
        return (_INV_SQRT2, -_INV_SQRT2, -_QUARTER_PI)
    e = case.e_ratio
    if e is None:
        raise ValueError(f"case {tag} requires e_ratio")
    r = math.hypot(1.0, e)
    major = math.sqrt((r + 1.0) / (2.0 * r))
    minor = abs(e) / math.sqrt(2.0 * r * (r + 1.0))
    half = 0.5 * math.atan(e)
    if tag == "I":
        return (major, minor, half)
    if tag == "II":
        return (major, -minor, half)
    if tag == "III":
        return (minor, major, half + _HALF_PI)
    if tag == "IV":
        return (minor, -major, half - _HALF_PI)
    raise ValueError(f"unknown case tag {tag!r}")


def fit_d(p: PairedSample, iso_tol: float | None = None) -> OrthogonalFit:
    """Perpendicular-distance fit in normal form.

    Returns a :class:`UniqueLine` through the centroid, or
    :class:`AllLinesThroughCentroid` when the statistics are isotropic.
    """
    s = summarize(p)
    return _fit_d_from_stats(s, iso_tol)


def _fit_d_from_stats(s: SummaryStats, iso_tol: float | None = None) -> OrthogonalFit:
    case = resolve_case(s, iso_tol)
    if case.tag == ISOTROPIC:
        return AllLinesThroughCentroid(
            Point(s.mean_x, s.mean_y), 0.5 * (s.var_x + s.var_y)
        )
    co, si, theta = trig_from_case(case)
    c = s.mean_x * si - s.mean_y * co
    return UniqueLine(NormalLine.canonical(theta, c), case)


def _min_objective_d(s: SummaryStats) -> float:
    # (S - sqrt((var_x-var_y)^2 + 4 cov^2)) / 2, rationalized so collinear
    # data lands at exactly the Cauchy-Schwarz gap scale instead of
    # cancelling two O(S) terms.
    gap = max(0.0, s.var_x * s.var_y - s.cov_xy**2)
    total = s.var_x + s.var_y
    spread = math.hypot(s.var_x - s.var_y, 2.0 * s.cov_xy)
    if total + spread == 0.0:
        return 0.0
    return 2.0 * gap / (total + spread)


def fit_d_report(p: PairedSample, iso_tol: float | None = None) -> FitReport:
    """Perpendicular fit packaged with its minimum objective and statistics."""
    s = summarize(p)
    fit = _fit_d_from_stats(s, iso_tol)
    if isinstance(fit, AllLinesThroughCentroid):
        return FitReport("D", fit, fit.objective, s)
    return FitReport("D", fit, _min_objective_d(s), s)


def objective_y(p: PairedSample, m: float, b: float) -> float:
    """Mean squared vertical offset of the points from y = m*x + b."""
    xs, ys = p.xs.values, p.ys.values
    return sum((m * x + b - y) ** 2 for x, y in zip(xs, ys)) / len(xs)


def objective_x(p: PairedSample, mu: float, beta: float) -> float:
    """Mean squared horizontal offset of the points from x = mu*y + beta."""
    xs, ys = p.xs.values, p.ys.values
    return sum((mu * y + beta - x) ** 2 for x, y in zip(xs, ys)) / len(xs)


def objective_d(p: PairedSample, theta: float, c: float) -> float:
    """Mean squared distance of the points from x*sin(theta) - y*cos(theta) = c."""
    xs, ys = p.xs.values, p.ys.values
    si, co = math.sin(theta), math.cos(theta)
    return sum((x * si - y * co - c) ** 2 for x, y in zip(xs, ys)) / len(xs)

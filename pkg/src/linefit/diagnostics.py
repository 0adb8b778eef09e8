"""Comparative diagnostics across the three fitted slopes.

For data with spread in both coordinates and nonzero covariance, the three
slopes in y-on-x terms are m = cov/var_x (vertical fit), tan(theta)
(perpendicular fit) and m_x = var_y/cov (horizontal fit), and they satisfy

    |m| <= sqrt(var_y/var_x) <= |m_x|

with equality exactly on collinear data.  The middle bound also sandwiches
|tan(theta)| in the sign-pattern cases I, II, V and VI; in cases III and IV
that ordering is only guaranteed under the gate condition
2*cov^2 >= var_x*|var_x - var_y|, and is merely observed otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fitters import (
    ISOTROPIC,
    iso_tolerance,
    resolve_case,
    trig_from_case,
    _has_x_spread,
)
from .stats import PairedSample, SummaryStats, summarize

__all__ = [
    "ORDERING_HOLDS",
    "ORDERING_EQUALITY",
    "ORDERING_NOT_APPLICABLE",
    "ORDERING_CONDITION_NOT_MET",
    "TAN_THETA_ALL",
    "ComparisonReport",
    "compare",
    "collinearity_tolerance",
]

ORDERING_HOLDS = "holds"
ORDERING_EQUALITY = "equality"
ORDERING_NOT_APPLICABLE = "not-applicable"
ORDERING_CONDITION_NOT_MET = "condition-not-met"

# every line through the centroid fits equally well
TAN_THETA_ALL = "all"


def collinearity_tolerance(s: SummaryStats) -> float:
    return 1e-12 * (s.var_x * s.var_y + 1.0)


@dataclass(frozen=True)
class ComparisonReport:
    """Slopes, bounds and orderings; absent values are encoded as None.

    ``m`` is missing on vertical data, ``m_x`` whenever the covariance is
    zero within tolerance (its formula divides by the covariance), and
    ``tan_theta`` is the string "all" in the isotropic case and None when the
    perpendicular fit is exactly vertical.
    """

    m: float | None
    m_x: float | None
    tan_theta: float | str | None
    ratio_bound: float | None
    ordering_e: str
    ordering_f: str
    ordering_f_observed: bool | None
    cs_gap: float
    collinear: bool
    case_tag: str


def compare(p: PairedSample, collinear_tol: float | None = None) -> ComparisonReport:
    s = summarize(p)
    tol_iso = iso_tolerance(s)
    tol_col = collinearity_tolerance(s) if collinear_tol is None else collinear_tol

    m = s.cov_xy / s.var_x if _has_x_spread(s) else None
    m_x = s.var_y / s.cov_xy if abs(s.cov_xy) > tol_iso else None
    ratio_bound = math.sqrt(s.var_y / s.var_x) if s.var_x > 0.0 else None

    case = resolve_case(s)
    if case.tag == ISOTROPIC:
        tan_theta: float | str | None = TAN_THETA_ALL
    else:
        co, si, _ = trig_from_case(case)
        tan_theta = si / co if co != 0.0 else None

    cs_gap = s.var_x * s.var_y - s.cov_xy**2
    collinear = cs_gap <= tol_col

    if m is None or m_x is None:
        ordering_e = ORDERING_NOT_APPLICABLE
    elif collinear:
        ordering_e = ORDERING_EQUALITY
    else:
        ordering_e = ORDERING_HOLDS

    observed: bool | None = None
    if m is not None and m_x is not None and isinstance(tan_theta, float):
        observed = abs(m) <= abs(tan_theta) <= abs(m_x)

    if m is None or m_x is None or case.tag == ISOTROPIC:
        ordering_f = ORDERING_NOT_APPLICABLE
    elif case.tag in ("I", "II", "V", "VI"):
        ordering_f = ORDERING_HOLDS
    elif 2.0 * s.cov_xy**2 >= s.var_x * abs(s.var_x - s.var_y):
        ordering_f = ORDERING_HOLDS
    else:
        ordering_f = ORDERING_CONDITION_NOT_MET

    return ComparisonReport(
        m=m,
        m_x=m_x,
        tan_theta=tan_theta,
        ratio_bound=ratio_bound,
        ordering_e=ordering_e,
        ordering_f=ordering_f,
        ordering_f_observed=observed,
        cs_gap=cs_gap,
        collinear=collinear,
        case_tag=case.tag,
    )

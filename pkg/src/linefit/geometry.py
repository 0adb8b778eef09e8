"""Line representations and point-to-line distance.

Three line forms are used throughout:

* slope-intercept ``y = m*x + b`` (cannot express vertical lines),
* inverse-slope ``x = mu*y + beta`` (cannot express horizontal lines),
* normal form ``x*sin(theta) - y*cos(theta) = c`` with theta in (-pi/2, pi/2],
  which expresses every line and treats the two axes symmetrically.

A fourth, ``a*x + b*y = c``, exists only as a distance-computation input and
is never normalized on construction, so user-supplied coefficients stay
inspectable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidLineError, NotRepresentableError

__all__ = [
    "EPS_VERTICAL",
    "EPS_HORIZONTAL",
    "Point",
    "SlopeInterceptLine",
    "InverseSlopeLine",
    "NormalLine",
    "GeneralLine",
    "point_line_distance",
    "normal_to_slope",
    "slope_to_normal",
    "inverse_slope_to_normal",
    "normal_to_inverse_slope",
    "normal_to_general",
]

# Below these, the converted slope would exceed ~1e9 and the target form is
# numerically meaningless.
EPS_VERTICAL = 1e-9
EPS_HORIZONTAL = 1e-9

_HALF_PI = math.pi / 2.0


def _require_finite(name: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise InvalidLineError(f"{name} requires finite parameters, got {v!r}")


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        _require_finite("Point", self.x, self.y)


@dataclass(frozen=True)
class SlopeInterceptLine:
    """y = m*x + b."""

    m: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "m", float(self.m))
        object.__setattr__(self, "b", float(self.b))
        _require_finite("SlopeInterceptLine", self.m, self.b)

    def y_at(self, x: float) -> float:
        return self.m * x + self.b


@dataclass(frozen=True)
class InverseSlopeLine:
    """x = mu*y + beta."""

    mu: float
    beta: float

    def __post_init__(self):
        object.__setattr__(self, "mu", float(self.mu))
        object.__setattr__(self, "beta", float(self.beta))
        _require_finite("InverseSlopeLine", self.mu, self.beta)

    def x_at(self, y: float) -> float:
        return self.mu * y + self.beta


@dataclass(frozen=True)
class NormalLine:
    """x*sin(theta) - y*cos(theta) = c, with theta in (-pi/2, pi/2].

    Use :meth:`canonical` when the angle may fall outside that range; a shift
    by pi describes the same point set with the sign of c flipped.
    """

    theta: float
    c: float

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta))
        object.__setattr__(self, "c", float(self.c))
        _require_finite("NormalLine", self.theta, self.c)
        if not (-_HALF_PI < self.theta <= _HALF_PI):
            raise InvalidLineError(
                f"theta must lie in (-pi/2, pi/2], got {self.theta!r}; "
                "use NormalLine.canonical to renormalize"
            )

    @classmethod
    def canonical(cls, theta: float, c: float) -> "NormalLine":
        theta = float(theta)
        c = float(c)
        _require_finite("NormalLine", theta, c)
        k = math.ceil((theta - _HALF_PI) / math.pi)
        theta -= k * math.pi
        if k % 2:
            c = -c
        # rounding in the subtraction can land exactly on the open boundary
        if theta <= -_HALF_PI:
            theta += math.pi
            c = -c
        elif theta > _HALF_PI:
            theta -= math.pi
            c = -c
        return cls(theta, c)

    def residual(self, p: Point) -> float:
        """Signed offset of p; its absolute value is the distance to the line."""
        return p.x * math.sin(self.theta) - p.y * math.cos(self.theta) - self.c

    def point_at(self, t: float) -> Point:
        """Point at arc-length parameter t along the line."""
        si, co = math.sin(self.theta), math.cos(self.theta)
        return Point(self.c * si + t * co, -self.c * co + t * si)


@dataclass(frozen=True)
class GeneralLine:
    """a*x + b*y = c with (a, b) != (0, 0).  Coefficients are kept as given."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "c", float(self.c))
        _require_finite("GeneralLine", self.a, self.b, self.c)
        if self.a == 0.0 and self.b == 0.0:
            raise InvalidLineError("degenerate line: a and b are both zero")


def point_line_distance(p: Point, line: GeneralLine) -> float:
    """Euclidean distance from p to the line, |a*x + b*y - c| / sqrt(a^2 + b^2)."""
    norm = math.hypot(line.a, line.b)
    return abs(line.a * p.x + line.b * p.y - line.c) / norm


def normal_to_slope(line: NormalLine) -> SlopeInterceptLine:
    """Rewrite as y = x*tan(theta) - c/cos(theta).

    Raises :class:`NotRepresentableError` for (near-)vertical lines, where
    |cos(theta)| <= EPS_VERTICAL.
    """
    co = math.cos(line.theta)
    if abs(co) <= EPS_VERTICAL:
        raise NotRepresentableError(
            f"line with theta={line.theta!r} is vertical within tolerance; "
            "it has no slope-intercept form"
        )
    return SlopeInterceptLine(math.tan(line.theta), -line.c / co)


def slope_to_normal(line: SlopeInterceptLine) -> NormalLine:
    """Inverse of :func:`normal_to_slope`; theta = arctan(m) is always in range."""
    theta = math.atan(line.m)
    return NormalLine(theta, -line.b * math.cos(theta))


def inverse_slope_to_normal(line: InverseSlopeLine) -> NormalLine:
    """Normal form of x = mu*y + beta; handles mu = 0 (vertical) exactly."""
    theta = _HALF_PI - math.atan(line.mu)
    return NormalLine.canonical(theta, line.beta * math.sin(theta))


def normal_to_inverse_slope(line: NormalLine) -> InverseSlopeLine:
    """Rewrite as x = y*cot(theta) + c/sin(theta); horizontal lines have none."""
    si = math.sin(line.theta)
    if abs(si) <= EPS_HORIZONTAL:
        raise NotRepresentableError(
            f"line with theta={line.theta!r} is horizontal within tolerance; "
            "it has no inverse-slope form"
        )
    return InverseSlopeLine(math.cos(line.theta) / si, line.c / si)


def normal_to_general(line: NormalLine) -> GeneralLine:
    return GeneralLine(math.sin(line.theta), -math.cos(line.theta), line.c)

"""Planar primitives: circle-circle intersections, chord stepping along a
monotone curve, reflections and rigid motions.

All operations are pure; points are plain (x, y) tuples of floats.
"""

import math
from dataclasses import dataclass

Point = tuple[float, float]


class GeometryError(ValueError):
    """Degenerate or inadmissible geometric input."""


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerance profile shared across the package.

    tangency_rel: relative tolerance on center distances for contact detection.
    solver_abs:   absolute tolerance for root finding.
    angle_slack:  slack (radians) when comparing angular gaps against pi.
    """

    tangency_rel: float = 1e-9
    solver_abs: float = 1e-12
    angle_slack: float = 1e-9

    def __post_init__(self):
        if not (self.tangency_rel > 0 and self.solver_abs > 0 and self.angle_slack > 0):
            raise ValueError("tolerances must be strictly positive")
        if not self.tangency_rel > self.solver_abs:
            raise ValueError("tangency_rel must exceed solver_abs")


DEFAULT_TOL = Tolerances()


def _require_finite(*points: Point):
    for p in points:
        if not (math.isfinite(p[0]) and math.isfinite(p[1])):
            raise GeometryError("non-finite coordinate: %r" % (p,))


def dist(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def circle_circle_intersections(c1: Point, r1: float, c2: Point, r2: float,
                                tol: Tolerances = DEFAULT_TOL) -> list[Point]:
    """Intersection points of two circles.

    Returns 2 points for proper crossing, 1 at (internal or external)
    tangency within tol.solver_abs, 0 when disjoint.  Coincident centers
    are rejected.
    """
    _require_finite(c1, c2)
    if r1 <= 0 or r2 <= 0:
        raise GeometryError("radii must be positive")
    d = dist(c1, c2)
    if d <= tol.solver_abs:
        raise GeometryError("coincident circle centers")
    outer = r1 + r2
    inner = abs(r1 - r2)
    if d > outer + tol.solver_abs or d < inner - tol.solver_abs:
        return []
    ux = (c2[0] - c1[0]) / d
    uy = (c2[1] - c1[1]) / d
    a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d)
    if abs(d - outer) <= tol.solver_abs or abs(d - inner) <= tol.solver_abs:
        return [(c1[0] + a * ux, c1[1] + a * uy)]
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    mx = c1[0] + a * ux
    my = c1[1] + a * uy
    return [(mx + h * uy, my - h * ux), (mx - h * uy, my + h * ux)]


def chord_step(curve, x_start: float, chord: float,
               tol: Tolerances = DEFAULT_TOL) -> float:
    """Smallest x' > x_start at which the point (x', curve(x')) lies at the
    given chord distance from (x_start, curve(x_start)).

    The curve must be continuous and non-increasing on [x_start, inf), so the
    distance along increasing x is monotone and the bracket
    [x_start, x_start + chord] always contains the root.  Plain bisection to
    tol.solver_abs.
    """
    if chord <= 0:
        raise GeometryError("chord must be positive")
    y0 = curve(x_start)
    if not math.isfinite(y0):
        raise GeometryError("curve not finite at x_start")
    if curve(x_start + chord) > y0 + tol.solver_abs:
        raise GeometryError("curve must be non-increasing on the bracket")

    def g(x):
        return math.hypot(x - x_start, curve(x) - y0) - chord

    lo, hi = x_start, x_start + chord
    if g(hi) < 0:
        raise GeometryError("curve increased: no root in bracket")
    glo = g(lo)
    while hi - lo > tol.solver_abs:
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if glo * gm <= 0:
            hi = mid
        else:
            lo, glo = mid, gm
    return 0.5 * (lo + hi)


def reflect_across_vertical(p: Point, x0: float) -> Point:
    _require_finite(p)
    return (2.0 * x0 - p[0], p[1])


def reflect_across_horizontal(p: Point, y0: float) -> Point:
    _require_finite(p)
    return (p[0], 2.0 * y0 - p[1])


def apply_rigid(p: Point, rotation: float, translation: Point) -> Point:
    """Rotate about the origin by `rotation` radians, then translate."""
    _require_finite(p, translation)
    c, s = math.cos(rotation), math.sin(rotation)
    return (c * p[0] - s * p[1] + translation[0],
            s * p[0] + c * p[1] + translation[1])

"""Named triangle constructions.

Medial triangle, orthocenter, circumcenter and circum-pedal triangles of
rational points are exact.  The incenter and arc midpoints involve square
roots, so they live in a separate binary64 layer returning
:class:`ApproxPoint` values that carry their own tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    CoincidentPoints,
    OutsideOrOnCircle,
    PointNotOnCircle,
    TangentLine,
    VertexPoint,
)
from .geometry import (
    Line2,
    Point2,
    Triangle2,
    dot,
    intersect_lines,
    midpoint,
    perpendicular_through,
)

DEFAULT_RELATIVE_TOL = 1e-9


@dataclass(frozen=True)
class Circle:
    center: Point2
    radius_squared: Fraction

    def __post_init__(self):
        if self.radius_squared <= 0:
            raise ValueError("radius_squared must be positive")

    def power(self, p: Point2) -> Fraction:
        d = p - self.center
        return dot(d, d) - self.radius_squared

    def contains(self, p: Point2) -> bool:
        return self.power(p) == 0


@dataclass(frozen=True)
class ApproxPoint:
    """Floating-point point with an absolute tolerance; always tagged approximate."""

    x: float
    y: float
    tol: float
    approx: bool = True

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")

    def distance_to(self, x: float, y: float) -> float:
        return math.hypot(self.x - x, self.y - y)


def complementary_triangle(T: Triangle2) -> Triangle2:
    A, B, C = T.vertices
    return Triangle2(midpoint(B, C), midpoint(C, A), midpoint(A, B))


medial_triangle = complementary_triangle


def _meet_point(l1: Line2, l2: Line2) -> Point2:
    return intersect_lines(l1, l2).to_point()


def orthocenter(T: Triangle2) -> Point2:
    A, B, C = T.vertices
    h = _meet_point(perpendicular_through(A, C - B), perpendicular_through(B, A - C))
    if not perpendicular_through(C, B - A).contains(h):
        raise AssertionError("altitudes are not concurrent")
    return h


def perpendicular_bisector(p: Point2, q: Point2) -> Line2:
    if p == q:
        raise CoincidentPoints("perpendicular bisector of a repeated point")
    return perpendicular_through(midpoint(p, q), q - p)


def circumcenter(T: Triangle2) -> Point2:
    A, B, C = T.vertices
    o = _meet_point(perpendicular_bisector(B, C), perpendicular_bisector(C, A))
    if not perpendicular_bisector(A, B).contains(o):
        raise AssertionError("perpendicular bisectors are not concurrent")
    return o


def circumcircle(T: Triangle2) -> Circle:
    o = circumcenter(T)
    r2 = dot(T.A - o, T.A - o)
    return Circle(o, r2)


def second_circle_intersection(circle: Circle, on: Point2, d: Point2) -> Point2:
    """Other intersection of line(on, d) with ``circle``, given ``on`` lies on it.

    With ``X(t) = on + t (d - on)`` the circle equation is a quadratic in
    ``t`` with root ``t = 0``; the other root is rational by Vieta.
    """
    if not circle.contains(on):
        raise PointNotOnCircle(f"{on} is not on the circle")
    if d == on:
        raise CoincidentPoints("the second point defines no line")
    u = d - on
    t = -2 * dot(on - circle.center, u) / dot(u, u)
    if t == 0:
        raise TangentLine(f"line through {on} and {d} is tangent to the circle")
    x = on + u * t
    assert circle.contains(x)
    return x


def circum_pedal_triangle(T: Triangle2, D: Point2) -> Triangle2:
    """Second intersections of the cevians AD, BD, CD with the circumcircle."""
    if D in T.vertices:
        raise VertexPoint(f"{D} is a vertex of the triangle")
    circle = circumcircle(T)
    if circle.power(D) >= 0:
        raise OutsideOrOnCircle(f"{D} is not strictly inside the circumcircle")
    return Triangle2(*(second_circle_intersection(circle, v, D) for v in T.vertices))


# -- approximate layer -------------------------------------------------------


def _fpt(p: Point2) -> tuple[float, float]:
    return (float(p.x), float(p.y))


def default_tol(T: Triangle2, relative: float = DEFAULT_RELATIVE_TOL) -> float:
    return relative * math.sqrt(float(T.diameter_squared()))


def incenter_approx(T: Triangle2, tol: Optional[float] = None) -> ApproxPoint:
    (ax, ay), (bx, by), (cx, cy) = (_fpt(v) for v in T.vertices)
    a = math.hypot(cx - bx, cy - by)
    b = math.hypot(ax - cx, ay - cy)
    c = math.hypot(bx - ax, by - ay)
    s = a + b + c
    return ApproxPoint(
        (a * ax + b * bx + c * cx) / s,
        (a * ay + b * by + c * cy) / s,
        default_tol(T) if tol is None else tol,
    )


_SIDES = {"BC": (1, 2, 0), "CA": (2, 0, 1), "AB": (0, 1, 2)}


def arc_midpoint_approx(T: Triangle2, side: str, tol: Optional[float] = None) -> ApproxPoint:
    """Midpoint of the arc cut off by ``side`` that avoids the opposite vertex."""
    try:
        i, j, k = _SIDES[side.upper()]
    except KeyError:
        raise ValueError(f"side must be one of BC, CA, AB, got {side!r}") from None
    verts = T.vertices
    circle = circumcircle(T)
    ox, oy = _fpt(circle.center)
    r = math.sqrt(float(circle.radius_squared))
    (px, py), (qx, qy), (vx, vy) = _fpt(verts[i]), _fpt(verts[j]), _fpt(verts[k])
    # unit normal of the side, oriented away from the opposite vertex
    nx, ny = -(qy - py), qx - px
    norm = math.hypot(nx, ny)
    nx, ny = nx / norm, ny / norm
    if (vx - px) * nx + (vy - py) * ny > 0:
        nx, ny = -nx, -ny
    return ApproxPoint(ox + r * nx, oy + r * ny, default_tol(T) if tol is None else tol)


def circum_pedal_approx(T: Triangle2, D: ApproxPoint) -> tuple[ApproxPoint, ApproxPoint, ApproxPoint]:
    """Floating-point circum-pedal triangle of an approximate interior point."""
    circle = circumcircle(T)
    ox, oy = _fpt(circle.center)
    out = []
    for v in T.vertices:
        px, py = _fpt(v)
        ux, uy = D.x - px, D.y - py
        t = -2 * ((px - ox) * ux + (py - oy) * uy) / (ux * ux + uy * uy)
        out.append(ApproxPoint(px + t * ux, py + t * uy, D.tol))
    return tuple(out)

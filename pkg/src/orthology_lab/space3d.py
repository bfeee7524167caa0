"""Orthology and homology analogues for triangles in space.

In the plane "the perpendicular from A to B1C1" is a line.  In space there
are two natural readings and both are provided:

* plane reading: the locus ``{X : (X - A) . (C1 - B1) = 0}``, a plane; the
  three planes are intersected (:func:`normal_plane_meet`);
* transversal reading: the line through ``A`` meeting line ``B1C1`` at a
  right angle (:func:`foot_perpendicular_line`), tested for concurrency
  with :func:`three_lines_concurrent3`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import CoincidentPoints, DegenerateTriangle, PointOnLine, ZeroDirection
from .geometry import as_rational
from .linalg import rank, solve
from .orthology import Correspondence
from .sampling import MAX_RESAMPLES, random_rational


@dataclass(frozen=True)
class Vec3:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for name in ("x", "y", "z"):
            v = getattr(self, name)
            if type(v) is not Fraction:
                object.__setattr__(self, name, as_rational(v))

    def __add__(self, o: Vec3) -> Vec3:
        return Vec3(self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: Vec3) -> Vec3:
        return Vec3(self.x - o.x, self.y - o.y, self.z - o.z)

    def __mul__(self, k) -> Vec3:
        k = as_rational(k)
        return Vec3(self.x * k, self.y * k, self.z * k)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0


@dataclass(frozen=True)
class Point3:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for name in ("x", "y", "z"):
            v = getattr(self, name)
            if type(v) is not Fraction:
                object.__setattr__(self, name, as_rational(v))

    def __sub__(self, o: Point3) -> Vec3:
        return Vec3(self.x - o.x, self.y - o.y, self.z - o.z)

    def __add__(self, v: Vec3) -> Point3:
        return Point3(self.x + v.x, self.y + v.y, self.z + v.z)

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    @classmethod
    def embed(cls, p) -> Point3:
        """Lift a planar point to ``z = 0``."""
        return cls(p.x, p.y, Fraction(0))


ORIGIN3 = Point3(Fraction(0), Fraction(0), Fraction(0))


def dot3(u: Vec3, v: Vec3) -> Fraction:
    return u.x * v.x + u.y * v.y + u.z * v.z


def cross3(u: Vec3, v: Vec3) -> Vec3:
    return Vec3(u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x)


@dataclass(frozen=True)
class Triangle3:
    A: Point3
    B: Point3
    C: Point3

    def __post_init__(self):
        if cross3(self.B - self.A, self.C - self.A).is_zero():
            raise DegenerateTriangle("collinear vertices")

    @property
    def vertices(self) -> tuple[Point3, Point3, Point3]:
        return (self.A, self.B, self.C)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def normal(self) -> Vec3:
        return cross3(self.B - self.A, self.C - self.A)

    @classmethod
    def embed(cls, t) -> Triangle3:
        return cls(*(Point3.embed(v) for v in t.vertices))


@dataclass(frozen=True)
class Line3:
    anchor: Point3
    direction: Vec3

    def __post_init__(self):
        if self.direction.is_zero():
            raise ZeroDirection("line direction must be nonzero")

    def contains(self, p: Point3) -> bool:
        return cross3(p - self.anchor, self.direction).is_zero()


@dataclass(frozen=True)
class NoUniquePoint:
    """The three planes do not meet in a single point.

    ``consistent`` tells whether they still share a common line (or plane).
    """

    rank: int
    consistent: bool


def coplanar_pair(t1: Triangle3, t2: Triangle3) -> bool:
    n = t1.normal
    return all(dot3(v - t1.A, n) == 0 for v in t2.vertices)


def deficit3(
    t1: Triangle3, t2: Triangle3, corr: Correspondence, M: Optional[Point3] = None
) -> Fraction:
    if M is None:
        M = ORIGIN3
    A, B, C = t1.vertices
    a1, b1, c1 = corr.images(t2)
    return dot3(A - M, c1 - b1) + dot3(B - M, a1 - c1) + dot3(C - M, b1 - a1)


def _plane_terms(t1, t2, corr):
    A, B, C = t1.vertices
    a1, b1, c1 = corr.images(t2)
    return ((A, c1 - b1), (B, a1 - c1), (C, b1 - a1))


def normal_plane_meet(t1: Triangle3, t2: Triangle3, corr: Correspondence) -> Union[Point3, NoUniquePoint]:
    """Intersect the planes through each vertex of t1 normal to the corresponding side of t2."""
    rows, rhs = [], []
    for p, n in _plane_terms(t1, t2, corr):
        if n.is_zero():
            raise ZeroDirection("image side collapses to a point")
        rows.append(list(n))
        rhs.append(dot3(p - ORIGIN3, n))
    sol = solve(rows, rhs)
    if sol is None:
        return NoUniquePoint(rank(rows), False)
    if not sol.unique:
        return NoUniquePoint(sol.rank, True)
    return Point3(*sol.point())


def foot_perpendicular_line(p: Point3, seg_a: Point3, seg_b: Point3) -> Line3:
    """Line through ``p`` that meets line(seg_a, seg_b) at a right angle."""
    if seg_a == seg_b:
        raise CoincidentPoints("segment endpoints coincide")
    foot = foot_point(p, seg_a, seg_b)
    if foot == p:
        raise PointOnLine(f"{p} lies on the target line")
    return Line3(p, foot - p)


def foot_point(p: Point3, seg_a: Point3, seg_b: Point3) -> Point3:
    """Orthogonal projection of ``p`` onto line(seg_a, seg_b)."""
    d = seg_b - seg_a
    return seg_a + d * (dot3(p - seg_a, d) / dot3(d, d))


def three_lines_concurrent3(l1: Line3, l2: Line3, l3: Line3) -> tuple[bool, Optional[Point3]]:
    """Whether exactly one point lies on all three lines, and that point.

    Solves ``a1 + s d1 = a2 + t d2 = a3 + u d3`` for ``(s, t, u)``.
    """
    rows, rhs = [], []
    for k in range(3):
        d1, d2, d3 = (tuple(l.direction)[k] for l in (l1, l2, l3))
        a1, a2, a3 = (tuple(l.anchor)[k] for l in (l1, l2, l3))
        rows.append([d1, -d2, Fraction(0)])
        rhs.append(a2 - a1)
        rows.append([d1, Fraction(0), -d3])
        rhs.append(a3 - a1)
    sol = solve(rows, rhs)
    if sol is None or not sol.unique:
        return False, None
    s = sol.point()[0]
    return True, l1.anchor + l1.direction * s


def foot_lines(t1: Triangle3, t2: Triangle3, corr: Correspondence) -> tuple[Line3, Line3, Line3]:
    A, B, C = t1.vertices
    a1, b1, c1 = corr.images(t2)
    return (
        foot_perpendicular_line(A, b1, c1),
        foot_perpendicular_line(B, c1, a1),
        foot_perpendicular_line(C, a1, b1),
    )


def connecting_lines3(t1: Triangle3, t2: Triangle3, corr: Correspondence) -> Optional[tuple[Line3, ...]]:
    lines = []
    for v, img in zip(t1.vertices, corr.images(t2)):
        if v == img:
            return None
        lines.append(Line3(v, img - v))
    return tuple(lines)


def is_homological3(t1: Triangle3, t2: Triangle3, corr: Correspondence) -> tuple[bool, Optional[Point3]]:
    lines = connecting_lines3(t1, t2, corr)
    if lines is None:
        return False, None
    return three_lines_concurrent3(*lines)


def random_point3(rng: random.Random, bound: int) -> Point3:
    return Point3(*(random_rational(rng, bound) for _ in range(3)))


def sample_triangle3(rng: random.Random, bound: int) -> Triangle3:
    if bound < 2:
        raise ValueError("coordinate range must be at least 2")
    while True:
        for _ in range(MAX_RESAMPLES):
            try:
                return Triangle3(*(random_point3(rng, bound) for _ in range(3)))
            except DegenerateTriangle:
                continue
        bound *= 2

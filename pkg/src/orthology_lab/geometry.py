"""Exact planar primitives over the rationals.

Every coordinate is a :class:`fractions.Fraction`; predicates are exact
zero-tests of small determinants, so there is no tolerance anywhere in this
module.  Lines and homogeneous points are stored in a canonical form, which
makes structural equality coincide with geometric equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateTriangle,
    ParseError,
    ZeroDirection,
)

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_HALF = Fraction(1, 2)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts fractions, integers and the text forms ``"p/q"`` or ``"p"``.
    Floats are refused: they would smuggle rounding into exact predicates.
    """
    if type(value) is Fraction:
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational expected, got {type(value).__name__}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise ParseError(f"malformed rational {value!r}") from None
        if d == 0:
            raise ParseError(f"zero denominator in rational {value!r}")
        return Fraction(n, d)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(q: Fraction) -> str:
    """Canonical text form ``p/q`` (q > 0, coprime), also for integers."""
    return f"{q.numerator}/{q.denominator}"


def _integer_coefficients(values: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Scale to coprime integers with the first nonzero entry positive."""
    lcm = 1
    for v in values:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [v.numerator * (lcm // v.denominator) for v in values]
    g = 0
    for i in ints:
        g = math.gcd(g, i)
    if g == 0:
        return values
    lead = next(i for i in ints if i != 0)
    if lead < 0:
        g = -g
    return tuple(Fraction(i // g) for i in ints)


@dataclass(frozen=True)
class Vec2:
    dx: Fraction
    dy: Fraction

    def __post_init__(self):
        if type(self.dx) is not Fraction:
            object.__setattr__(self, "dx", as_rational(self.dx))
        if type(self.dy) is not Fraction:
            object.__setattr__(self, "dy", as_rational(self.dy))

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.dx - other.dx, self.dy - other.dy)

    def __neg__(self) -> Vec2:
        return Vec2(-self.dx, -self.dy)

    def __mul__(self, k) -> Vec2:
        k = as_rational(k)
        return Vec2(self.dx * k, self.dy * k)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.dx == 0 and self.dy == 0


@dataclass(frozen=True)
class Point2:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        if type(self.x) is not Fraction:
            object.__setattr__(self, "x", as_rational(self.x))
        if type(self.y) is not Fraction:
            object.__setattr__(self, "y", as_rational(self.y))

    def __sub__(self, other: Point2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __add__(self, v: Vec2) -> Point2:
        return Point2(self.x + v.dx, self.y + v.dy)

    def as_vec(self) -> Vec2:
        return Vec2(self.x, self.y)

    def __iter__(self):
        yield self.x
        yield self.y


ORIGIN = Point2(Fraction(0), Fraction(0))


@dataclass(frozen=True)
class Line2:
    """The line ``a*x + b*y + c = 0``, stored canonically."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = (as_rational(v) for v in (self.a, self.b, self.c))
        if a == 0 and b == 0:
            raise ZeroDirection("line needs (a, b) != (0, 0)")
        a, b, c = _integer_coefficients((a, b, c))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def evaluate(self, p: Point2) -> Fraction:
        return self.a * p.x + self.b * p.y + self.c

    def contains(self, p: Point2) -> bool:
        return self.evaluate(p) == 0

    def incident(self, h: HPoint) -> bool:
        return self.a * h.X + self.b * h.Y + self.c * h.W == 0

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class HPoint:
    """Homogeneous point; ``W == 0`` encodes a direction at infinity.

    Finite points are normalized to ``W == 1``; points at infinity to a
    coprime integer direction whose first nonzero entry is positive.
    """

    X: Fraction
    Y: Fraction
    W: Fraction

    def __post_init__(self):
        X, Y, W = (as_rational(v) for v in (self.X, self.Y, self.W))
        if X == 0 and Y == 0 and W == 0:
            raise ValueError("(0, 0, 0) is not a projective point")
        if W != 0:
            X, Y, W = X / W, Y / W, Fraction(1)
        else:
            X, Y, W = _integer_coefficients((X, Y, W))
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        object.__setattr__(self, "W", W)

    @classmethod
    def from_point(cls, p: Point2) -> HPoint:
        return cls(p.x, p.y, Fraction(1))

    @property
    def is_finite(self) -> bool:
        return self.W != 0

    def to_point(self) -> Point2:
        if self.W == 0:
            raise ValueError("point at infinity has no affine coordinates")
        return Point2(self.X, self.Y)

    @property
    def direction(self) -> Vec2:
        return Vec2(self.X, self.Y)


class _CoincidentType:
    """Result marker for :func:`intersect_lines` on identical lines."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Coincident"


Coincident = _CoincidentType()


def orientation(p: Point2, q: Point2, r: Point2) -> Fraction:
    """Twice the signed area of ``pqr``; positive when counter-clockwise."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


@dataclass(frozen=True)
class Triangle2:
    A: Point2
    B: Point2
    C: Point2

    def __post_init__(self):
        if orientation(self.A, self.B, self.C) == 0:
            raise DegenerateTriangle(f"collinear vertices {self.A}, {self.B}, {self.C}")

    @property
    def vertices(self) -> tuple[Point2, Point2, Point2]:
        return (self.A, self.B, self.C)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i: int) -> Point2:
        return self.vertices[i]

    def translated(self, v: Vec2) -> Triangle2:
        return Triangle2(self.A + v, self.B + v, self.C + v)

    def diameter_squared(self) -> Fraction:
        a, b, c = self.vertices
        return max(dot(b - a, b - a), dot(c - b, c - b), dot(a - c, a - c))


def dot(u: Vec2, v: Vec2) -> Fraction:
    return u.dx * v.dx + u.dy * v.dy


def cross(u: Vec2, v: Vec2) -> Fraction:
    return u.dx * v.dy - u.dy * v.dx


def line_through(p: Point2, q: Point2) -> Line2:
    if p == q:
        raise CoincidentPoints(f"no unique line through {p} twice")
    # (p, 1) x (q, 1)
    return Line2(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y)


def perpendicular_through(p: Point2, d: Vec2) -> Line2:
    """Line through ``p`` whose normal is ``d``: {X : (X - p) . d = 0}."""
    if d.is_zero():
        raise ZeroDirection("perpendicular to a zero vector is undefined")
    return Line2(d.dx, d.dy, -(d.dx * p.x + d.dy * p.y))


def _cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(r1, r2, r3) -> Fraction:
    return (
        r1[0] * (r2[1] * r3[2] - r2[2] * r3[1])
        - r1[1] * (r2[0] * r3[2] - r2[2] * r3[0])
        + r1[2] * (r2[0] * r3[1] - r2[1] * r3[0])
    )


def lines_coincide(l1: Line2, l2: Line2) -> bool:
    # canonical forms make this structural
    return l1 == l2


def intersect_lines(l1: Line2, l2: Line2):
    """Meet of two lines as an :class:`HPoint`, or ``Coincident``.

    Parallel distinct lines give a point at infinity (``W == 0``).
    """
    X, Y, W = _cross3(l1.coefficients, l2.coefficients)
    if X == 0 and Y == 0 and W == 0:
        return Coincident
    return HPoint(X, Y, W)


def lines_determinant(l1: Line2, l2: Line2, l3: Line2) -> Fraction:
    return det3(l1.coefficients, l2.coefficients, l3.coefficients)


def concurrent(l1: Line2, l2: Line2, l3: Line2) -> bool:
    """True iff the three lines share a point, possibly at infinity."""
    if l1 == l2 or l2 == l3 or l1 == l3:
        raise CoincidentLines("concurrency of a pencil with repeated lines is ill-posed")
    return lines_determinant(l1, l2, l3) == 0


def midpoint(p: Point2, q: Point2) -> Point2:
    return Point2((p.x + q.x) * _HALF, (p.y + q.y) * _HALF)


def collinear(p: Point2, q: Point2, r: Point2) -> bool:
    return orientation(p, q, r) == 0

from fractions import Fraction as F

import pytest
from hypothesis import given

from orthology_lab.constructions import complementary_triangle
from orthology_lab.errors import CoincidentPoints, PointOnLine
from orthology_lab.geometry import Point2, Triangle2
from orthology_lab.orthology import CYCLIC, Correspondence, TrianglePair, deficit, is_orthologic, orthology_center
from orthology_lab.space3d import (
    Line3,
    NoUniquePoint,
    Point3,
    Triangle3,
    Vec3,
    coplanar_pair,
    cross3,
    deficit3,
    dot3,
    foot_lines,
    foot_perpendicular_line,
    foot_point,
    is_homological3,
    normal_plane_meet,
    three_lines_concurrent3,
)

from strategies import correspondences, pairs, points3, triangles3

S0, S1, S2 = CYCLIC
WORKED = Triangle2(Point2(0, 0), Point2(4, 0), Point2(1, 3))


def Q(x, y, z):
    return Point3(x, y, z)


@given(pairs, correspondences)
def test_embedding_reproduces_planar_deficit(pair, corr):
    t1, t2 = Triangle3.embed(pair.t1), Triangle3.embed(pair.t2)
    assert deficit3(t1, t2, corr) == deficit(pair, corr)
    assert coplanar_pair(t1, t2)


def test_lifted_medial_has_zero_deficit():
    t1 = Triangle3.embed(WORKED)
    lift = Triangle3(*(Point3.embed(v) + Vec3(0, 0, 1) for v in complementary_triangle(WORKED).vertices))
    assert deficit3(t1, lift, S0) == 0
    assert not coplanar_pair(t1, lift)


@given(triangles3, triangles3, points3, points3)
def test_deficit3_identities(t1, t2, m, n):
    for c in Correspondence:
        assert deficit3(t1, t2, c, m) == deficit3(t1, t2, c, n)
    assert sum(deficit3(t1, t2, c, m) for c in CYCLIC) == 0


@given(triangles3, triangles3, correspondences)
def test_normal_planes_never_meet_in_one_point(t1, t2, corr):
    # the three normals are t2's side vectors, which always sum to zero
    out = normal_plane_meet(t1, t2, corr)
    assert isinstance(out, NoUniquePoint)
    assert out.rank == 2
    assert out.consistent == (deficit3(t1, t2, corr) == 0)


def test_normal_plane_examples():
    t1 = Triangle3(Q(0, 0, 0), Q(1, 0, 0), Q(0, 1, 0))
    t2 = Triangle3(Q(0, 0, 5), Q(2, 1, 3), Q(-1, 4, 2))
    assert normal_plane_meet(t1, t2, S0) == NoUniquePoint(2, deficit3(t1, t2, S0) == 0)
    emb = normal_plane_meet(Triangle3.embed(WORKED), Triangle3.embed(complementary_triangle(WORKED)), S0)
    assert emb == NoUniquePoint(2, True)


def test_foot_examples():
    line = foot_perpendicular_line(Q(0, 0, 1), Q(0, 0, 0), Q(1, 0, 0))
    assert line.direction == Vec3(0, 0, -1)
    assert foot_point(Q(0, 0, 1), Q(0, 0, 0), Q(1, 0, 0)) == Q(0, 0, 0)
    assert foot_point(Q(1, 1, 0), Q(0, 0, 0), Q(2, 0, 0)) == Q(1, 0, 0)
    with pytest.raises(PointOnLine):
        foot_perpendicular_line(Q(5, 0, 0), Q(0, 0, 0), Q(1, 0, 0))
    with pytest.raises(CoincidentPoints):
        foot_perpendicular_line(Q(5, 1, 0), Q(1, 1, 1), Q(1, 1, 1))


@given(points3, points3, points3)
def test_foot_correctness(p, a, b):
    if a == b:
        return
    f = foot_point(p, a, b)
    d = b - a
    assert cross3(f - a, d).is_zero()
    assert dot3(p - f, d) == 0


def test_three_lines_examples():
    axes = [Line3(Q(0, 0, 0), Vec3(*e)) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    assert three_lines_concurrent3(*axes) == (True, Q(0, 0, 0))
    skew = Line3(Q(0, 0, 1), Vec3(0, 1, 0))
    assert three_lines_concurrent3(axes[0], skew, axes[2]) == (False, None)
    target = Q(1, 2, 3)
    lines = [Line3(target + Vec3(*d) * 2, Vec3(*d)) for d in ((1, 1, 0), (0, 2, -1), (3, 0, 1))]
    assert three_lines_concurrent3(*lines) == (True, target)


def test_parallel_lines_not_concurrent():
    a = Line3(Q(0, 0, 0), Vec3(1, 0, 0))
    b = Line3(Q(0, 1, 0), Vec3(1, 0, 0))
    c = Line3(Q(0, 0, 0), Vec3(0, 1, 0))
    assert three_lines_concurrent3(a, b, c) == (False, None)


@given(pairs)
def test_embedding_foot_lines_follow_planar_verdict(pair):
    # in the plane, foot lines are exactly the perpendicular pencil of the swapped roles
    t1, t2 = Triangle3.embed(pair.t1), Triangle3.embed(pair.t2)
    try:
        lines = foot_lines(t1, t2, S0)
    except PointOnLine:
        return
    ok, point = three_lines_concurrent3(*lines)
    planar = TrianglePair(pair.t1, pair.t2)
    if is_orthologic(planar, S0):
        h = orthology_center(planar, S0)
        if h.is_finite:
            c = h.to_point()
            assert ok and point == Q(c.x, c.y, 0)
    else:
        assert not ok


@given(pairs, correspondences)
def test_embedding_homology_matches_planar(pair, corr):
    from orthology_lab.errors import DegenerateCevian
    from orthology_lab.homology import homology_perspector, is_homological

    t1, t2 = Triangle3.embed(pair.t1), Triangle3.embed(pair.t2)
    try:
        planar = is_homological(pair, corr)
    except DegenerateCevian:
        return
    ok, point = is_homological3(t1, t2, corr)
    if planar:
        h = homology_perspector(pair, corr) if len(set(_lines(pair, corr))) == 3 else None
        if h is not None and h.is_finite:
            assert ok and point == Point3.embed(h.to_point())
    else:
        assert not ok


def _lines(pair, corr):
    from orthology_lab.homology import connecting_lines

    return connecting_lines(pair, corr)

"""Perspectivity ("homology") of triangle pairs.

Two triangles are homological under a correspondence when the lines joining
each vertex to its image are concurrent; the common point is the perspector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import (
    DegenerateCevian,
    DegenerateTriangle,
    GenerationFailed,
    NotHomological,
    PencilDegenerate,
)
from .geometry import HPoint, Line2, Point2, Triangle2, det3, intersect_lines, line_through
from .linalg import solve
from .orthology import (
    ALL_CORRESPONDENCES,
    Correspondence,
    TrianglePair,
    is_orthologic,
)
from .sampling import MAX_RESAMPLES, make_rng, random_point


def connecting_lines(pair: TrianglePair, corr: Correspondence) -> tuple[Line2, Line2, Line2]:
    lines = []
    for v, img in zip(pair.t1.vertices, corr.images(pair.t2)):
        if v == img:
            raise DegenerateCevian(f"vertex {v} coincides with its image under {corr.label}")
        lines.append(line_through(v, img))
    return tuple(lines)


def is_homological(pair: TrianglePair, corr: Correspondence = Correspondence.SIGMA0) -> bool:
    l1, l2, l3 = connecting_lines(pair, corr)
    return det3(l1.coefficients, l2.coefficients, l3.coefficients) == 0


def homology_perspector(pair: TrianglePair, corr: Correspondence = Correspondence.SIGMA0) -> HPoint:
    l1, l2, l3 = connecting_lines(pair, corr)
    if det3(l1.coefficients, l2.coefficients, l3.coefficients) != 0:
        raise NotHomological(f"connecting lines under {corr.label} are not concurrent")
    if l1 == l2 or l2 == l3 or l1 == l3:
        raise PencilDegenerate(f"two connecting lines coincide under {corr.label}")
    p = intersect_lines(l1, l2)
    assert l3.incident(p)
    return p


def is_orthohomological(pair: TrianglePair, corr: Correspondence = Correspondence.SIGMA0) -> bool:
    return is_orthologic(pair, corr) and is_homological(pair, corr)


@dataclass(frozen=True)
class HomologyEntry:
    correspondence: Correspondence
    homological: bool
    perspector: Optional[HPoint]
    degenerate: bool


@dataclass(frozen=True)
class HomologyReport:
    entries: tuple[HomologyEntry, ...]

    @property
    def k_count(self) -> int:
        return sum(1 for e in self.entries if e.homological)

    @property
    def cyclic_k_count(self) -> int:
        return sum(1 for e in self.entries if e.homological and e.correspondence.is_cyclic)

    def entry(self, corr: Correspondence) -> HomologyEntry:
        return next(e for e in self.entries if e.correspondence is corr)

    def homological_set(self) -> tuple[Correspondence, ...]:
        return tuple(e.correspondence for e in self.entries if e.homological)


def homology_spectrum(
    pair: TrianglePair, correspondences: Sequence[Correspondence] = ALL_CORRESPONDENCES
) -> HomologyReport:
    entries = []
    for corr in correspondences:
        try:
            lines = connecting_lines(pair, corr)
        except DegenerateCevian:
            entries.append(HomologyEntry(corr, False, None, True))
            continue
        l1, l2, l3 = lines
        homological = det3(l1.coefficients, l2.coefficients, l3.coefficients) == 0
        distinct = l1 != l2 and l2 != l3 and l1 != l3
        perspector = intersect_lines(l1, l2) if homological and distinct else None
        entries.append(HomologyEntry(corr, homological, perspector, not distinct))
    return HomologyReport(tuple(entries))


def _raw_line(p: Point2, q: Point2):
    # unnormalized join, linear in each endpoint
    return (p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y)


def _concurrency_det(t1_vertices, images) -> Fraction:
    rows = [_raw_line(v, img) for v, img in zip(t1_vertices, images)]
    return det3(*rows)


def _affine_in_vertex(t1: Triangle2, known: dict[int, Point2], unknown: int, corr: Correspondence):
    """Coefficients (c0, cx, cy) of the concurrency determinant as a function of one t2 vertex."""

    def at(p):
        verts = dict(known)
        verts[unknown] = p
        return _concurrency_det(t1.vertices, [verts[j] for j in corr.value])

    f0 = at(Point2(0, 0))
    return f0, at(Point2(1, 0)) - f0, at(Point2(0, 1)) - f0


def generate_bihomological(
    t1: Triangle2,
    seed: int,
    *,
    correspondences: Sequence[Correspondence] = (Correspondence.SIGMA0, Correspondence.SIGMA1),
    coordinate_range: int = 10,
    sampler: Optional[Callable] = None,
) -> TrianglePair:
    """Seeded pair perspective under both given correspondences.

    Two vertices of t2 are drawn; each concurrency determinant is affine in
    the third (every correspondence uses it in exactly one connecting line),
    so it solves a 2x2 rational system.  For the cyclic pair the solved
    vertex is ``A1``.
    """
    if len(correspondences) != 2 or correspondences[0] == correspondences[1]:
        raise ValueError("exactly two distinct correspondences are required")
    # solve for a t2 vertex joined to different t1 vertices by the two
    # correspondences; if both joins share the same t1 vertex the two lines
    # meet only there and the solve collapses onto t1
    first, second = correspondences
    unknown = next(j for j in range(3) if first.value.index(j) != second.value.index(j))
    rng = make_rng(seed)
    draw = sampler if sampler is not None else (lambda r: random_point(r, coordinate_range))
    for _ in range(MAX_RESAMPLES):
        known = {j: draw(rng) for j in range(3) if j != unknown}
        A, b = [], []
        for corr in correspondences:
            c0, cx, cy = _affine_in_vertex(t1, known, unknown, corr)
            A.append([cx, cy])
            b.append(-c0)
        sol = solve(A, b)
        if sol is None or not sol.unique:
            continue
        known[unknown] = Point2(*sol.point())
        try:
            t2 = Triangle2(known[0], known[1], known[2])
        except DegenerateTriangle:
            continue
        pair = TrianglePair(t1, t2)
        try:
            ok = all(_distinct_lines(pair, c) for c in correspondences)
        except DegenerateCevian:
            continue
        if ok:
            return pair
    raise GenerationFailed(f"no non-degenerate bi-homological witness after {MAX_RESAMPLES} draws")


def _distinct_lines(pair, corr) -> bool:
    l1, l2, l3 = connecting_lines(pair, corr)
    return l1 != l2 and l2 != l3 and l1 != l3

"""Orthology of triangle pairs under the six vertex correspondences.

Triangle ``ABC`` is orthologic to ``A1B1C1`` when the perpendiculars from
``A``, ``B``, ``C`` onto ``B1C1``, ``C1A1``, ``A1B1`` are concurrent.  The
test used here is the scalar

    E(M) = MA . B1C1 + MB . C1A1 + MC . A1B1

which does not depend on ``M`` and vanishes exactly for orthologic pairs.
Everything is exact; there are no tolerances.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import (
    DegenerateTriangle,
    GenerationFailed,
    NotBiorthologic,
    NotOrthologic,
    PencilDegenerate,
    ZeroDirection,
)
from .geometry import (
    ORIGIN,
    Coincident,
    HPoint,
    Line2,
    Point2,
    Triangle2,
    concurrent,
    dot,
    intersect_lines,
    perpendicular_through,
)
from .linalg import solve
from .sampling import MAX_RESAMPLES, make_rng, random_point


class Correspondence(enum.Enum):
    """Vertex bijection ``ABC -> A1B1C1``; the value lists image indices.

    ``SIGMA1`` sends ``A, B, C`` to ``B1, C1, A1``, i.e. it pairs ``ABC``
    with the relabelled triangle ``B1C1A1``.  The three ``TAU`` members are
    the transpositions: ``TAU0`` fixes ``A``, ``TAU1`` fixes ``B``,
    ``TAU2`` fixes ``C``.
    """

    SIGMA0 = (0, 1, 2)
    SIGMA1 = (1, 2, 0)
    SIGMA2 = (2, 0, 1)
    TAU0 = (0, 2, 1)
    TAU1 = (2, 1, 0)
    TAU2 = (1, 0, 2)

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def perm(self) -> tuple[int, int, int]:
        return self.value

    @property
    def is_cyclic(self) -> bool:
        return self in CYCLIC

    @property
    def inverse(self) -> Correspondence:
        inv = [0, 0, 0]
        for i, j in enumerate(self.value):
            inv[j] = i
        return Correspondence(tuple(inv))

    def images(self, t2) -> tuple:
        """Images of ``(A, B, C)`` among the vertices of ``t2``."""
        v = t2.vertices
        return (v[self.value[0]], v[self.value[1]], v[self.value[2]])

    @classmethod
    def parse(cls, text: str) -> Correspondence:
        key = text.strip().lower()
        for alias, member in _ALIASES.items():
            if key == alias:
                return member
        raise ValueError(f"unknown correspondence {text!r}")


_LABELS = {
    Correspondence.SIGMA0: "σ0",
    Correspondence.SIGMA1: "σ1",
    Correspondence.SIGMA2: "σ2",
    Correspondence.TAU0: "τ0",
    Correspondence.TAU1: "τ1",
    Correspondence.TAU2: "τ2",
}
_ALIASES = {}
for _member, _label in _LABELS.items():
    _greek, _digit = _label[0], _label[1]
    _word = "sigma" if _greek == "σ" else "tau"
    for _alias in (_label, _word + _digit, _word[0] + _digit, _member.name.lower()):
        _ALIASES[_alias] = _member

CYCLIC = (Correspondence.SIGMA0, Correspondence.SIGMA1, Correspondence.SIGMA2)
ALL_CORRESPONDENCES = tuple(Correspondence)


@dataclass(frozen=True)
class TrianglePair:
    t1: Triangle2
    t2: Triangle2

    def swapped(self) -> TrianglePair:
        return TrianglePair(self.t2, self.t1)


def _side_terms(t1, t2, corr):
    """Pairs (vertex of t1, image side vector) entering the deficit."""
    A, B, C = t1.vertices
    a1, b1, c1 = corr.images(t2)
    return ((A, c1 - b1), (B, a1 - c1), (C, b1 - a1))


def deficit(pair: TrianglePair, corr: Correspondence, M: Optional[Point2] = None) -> Fraction:
    """Orthology deficit ``E(M)`` of ``pair.t1`` relative to ``pair.t2``."""
    if M is None:
        M = ORIGIN
    total = Fraction(0)
    for vertex, side in _side_terms(pair.t1, pair.t2, corr):
        total += dot(vertex - M, side)
    return total


def drift(pair: TrianglePair, corr: Correspondence, M: Point2, N: Point2) -> Fraction:
    """``E(M) - E(N)``; identically zero."""
    return deficit(pair, corr, M) - deficit(pair, corr, N)


def is_orthologic(pair: TrianglePair, corr: Correspondence = Correspondence.SIGMA0) -> bool:
    return deficit(pair, corr) == 0


def perpendicular_pencil(pair: TrianglePair, corr: Correspondence) -> tuple[Line2, Line2, Line2]:
    """Perpendiculars from the vertices of t1 onto the corresponding sides of t2."""
    return tuple(perpendicular_through(v, side) for v, side in _side_terms(pair.t1, pair.t2, corr))


def orthology_center(pair: TrianglePair, corr: Correspondence = Correspondence.SIGMA0) -> HPoint:
    d = deficit(pair, corr)
    if d != 0:
        raise NotOrthologic(f"deficit under {corr.label} is {d}, not 0")
    l1, l2, l3 = perpendicular_pencil(pair, corr)
    if l1 == l2 or l2 == l3 or l1 == l3:
        raise PencilDegenerate(f"coincident perpendiculars under {corr.label}")
    center = intersect_lines(l1, l2)
    if not l3.incident(center):
        raise AssertionError("third perpendicular misses the center of an orthologic pair")
    return center


def pencil_concurrent(pair: TrianglePair, corr: Correspondence) -> bool:
    """Independent orthology test: the determinant of the perpendicular pencil."""
    return concurrent(*perpendicular_pencil(pair, corr))


def cyclic_deficit_sum(pair: TrianglePair, M: Optional[Point2] = None) -> Fraction:
    return sum((deficit(pair, c, M) for c in CYCLIC), Fraction(0))


def is_biorthologic(pair: TrianglePair) -> bool:
    return is_orthologic(pair, Correspondence.SIGMA0) and is_orthologic(pair, Correspondence.SIGMA1)


def pantazi_verdict(pair: TrianglePair) -> bool:
    """For a bi-orthologic pair, whether it is orthologic under the third cyclic shift."""
    if not is_biorthologic(pair):
        raise NotBiorthologic("pair is not orthologic under both σ0 and σ1")
    return is_orthologic(pair, Correspondence.SIGMA2)


@dataclass(frozen=True)
class OrthologyEntry:
    correspondence: Correspondence
    deficit: Fraction
    orthologic: bool
    center: Optional[HPoint]
    degenerate: Optional[str] = None


@dataclass(frozen=True)
class OrthologyReport:
    entries: tuple[OrthologyEntry, ...]

    @property
    def k_count(self) -> int:
        return sum(1 for e in self.entries if e.orthologic)

    @property
    def cyclic_k_count(self) -> int:
        return sum(1 for e in self.entries if e.orthologic and e.correspondence.is_cyclic)

    def entry(self, corr: Correspondence) -> OrthologyEntry:
        return next(e for e in self.entries if e.correspondence is corr)

    def orthologic_set(self) -> tuple[Correspondence, ...]:
        return tuple(e.correspondence for e in self.entries if e.orthologic)


def orthology_spectrum(
    pair: TrianglePair, correspondences: Sequence[Correspondence] = ALL_CORRESPONDENCES
) -> OrthologyReport:
    entries = []
    for corr in correspondences:
        d = deficit(pair, corr)
        center, degenerate = None, None
        if d == 0:
            try:
                center = orthology_center(pair, corr)
            except PencilDegenerate as exc:
                degenerate = str(exc)
            except ZeroDirection as exc:
                degenerate = str(exc)
        entries.append(OrthologyEntry(corr, d, d == 0, center, degenerate))
    return OrthologyReport(tuple(entries))


def orthology_row(t1, corr: Correspondence) -> tuple[Fraction, ...]:
    """Coefficients of the deficit as a linear form in the coordinates of t2.

    The deficit at the origin is linear (no constant term) in the flattened
    coordinates ``(A1.x, A1.y, B1.x, ...)`` of the second triangle; the image
    of vertex ``i`` is weighted by ``V[i+1] - V[i+2]``.  Works in any
    dimension: points only need to be iterable over their coordinates.
    """
    verts = [tuple(v) for v in t1.vertices]
    dim = len(verts[0])
    row = [Fraction(0)] * (3 * dim)
    for i, j in enumerate(corr.value):
        nxt, nxt2 = verts[(i + 1) % 3], verts[(i + 2) % 3]
        for k in range(dim):
            row[dim * j + k] += nxt[k] - nxt2[k]
    return tuple(row)


def solve_orthologic_vertex(
    t1: Triangle2,
    known: dict[int, Point2],
    unknown: int,
    correspondences: Sequence[Correspondence],
) -> Optional[Point2]:
    """Position of vertex ``unknown`` of t2 making both correspondences orthologic.

    ``known`` fixes the two other vertices of t2.  Returns ``None`` when the
    2x2 system is singular or inconsistent.
    """
    rows = [orthology_row(t1, c) for c in correspondences]
    A, b = [], []
    for row in rows:
        rhs = Fraction(0)
        for j, p in known.items():
            rhs -= row[2 * j] * p.x + row[2 * j + 1] * p.y
        A.append([row[2 * unknown], row[2 * unknown + 1]])
        b.append(rhs)
    sol = solve(A, b)
    if sol is None or not sol.unique:
        return None
    return Point2(*sol.point())


def complete_biorthologic(t1: Triangle2, a1: Point2, b1: Point2) -> Triangle2:
    """Third vertex ``C1`` such that t1 is orthologic to ``A1B1C1`` under σ0 and σ1."""
    c1 = solve_orthologic_vertex(t1, {0: a1, 1: b1}, 2, (Correspondence.SIGMA0, Correspondence.SIGMA1))
    if c1 is None:
        raise GenerationFailed("σ0/σ1 conditions are singular in C1")
    return Triangle2(a1, b1, c1)


def generate_biorthologic(
    t1: Triangle2,
    seed: int,
    *,
    correspondences: Sequence[Correspondence] = (Correspondence.SIGMA0, Correspondence.SIGMA1),
    coordinate_range: int = 10,
    sampler: Optional[Callable] = None,
) -> TrianglePair:
    """Seeded witness t2 orthologic to t1 under both given correspondences.

    Two vertices of t2 are drawn at random and the third is solved for
    exactly; singular systems and degenerate t2 are redrawn, up to 64 times.
    ``sampler(rng)`` may replace the default point distribution.
    """
    if len(correspondences) != 2 or correspondences[0] == correspondences[1]:
        raise ValueError("exactly two distinct correspondences are required")
    rng = make_rng(seed)
    draw = sampler if sampler is not None else (lambda r: random_point(r, coordinate_range))
    for _ in range(MAX_RESAMPLES):
        p, q = draw(rng), draw(rng)
        for unknown in (2, 0, 1):
            known = dict(zip([j for j in range(3) if j != unknown], (p, q)))
            x = solve_orthologic_vertex(t1, known, unknown, correspondences)
            if x is None:
                continue
            verts = dict(known)
            verts[unknown] = x
            try:
                t2 = Triangle2(verts[0], verts[1], verts[2])
            except DegenerateTriangle:
                break
            return TrianglePair(t1, t2)
    raise GenerationFailed(f"no non-degenerate witness after {MAX_RESAMPLES} draws")

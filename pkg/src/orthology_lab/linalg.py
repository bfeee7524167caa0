"""Gauss-Jordan elimination over the rationals.

Small dense systems only (at most a handful of rows and columns), so the
plain cubic algorithm on :class:`~fractions.Fraction` entries is adequate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    """Reduced row echelon form and the pivot column indices."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return m, ()
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, tuple(pivots)


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


@dataclass(frozen=True)
class LinearSolution:
    """Affine solution set of a consistent system ``A x = b``.

    Pivot variables are determined by the free ones; :meth:`point` fills in
    the free variables and returns the full solution vector.
    """

    n: int
    pivots: tuple[int, ...]
    free: tuple[int, ...]
    reduced: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def unique(self) -> bool:
        return not self.free

    def point(self, free_values: Sequence = ()) -> tuple[Fraction, ...]:
        if len(free_values) != len(self.free):
            raise ValueError(f"expected {len(self.free)} free values, got {len(free_values)}")
        x = [Fraction(0)] * self.n
        for j, v in zip(self.free, free_values):
            x[j] = Fraction(v)
        for row, p in zip(self.reduced, self.pivots):
            x[p] = row[self.n] - sum((row[j] * x[j] for j in self.free), Fraction(0))
        return tuple(x)


def solve(A: Sequence[Sequence], b: Sequence) -> LinearSolution | None:
    """Solve ``A x = b`` exactly; ``None`` when the system is inconsistent."""
    if len(A) != len(b):
        raise ValueError("row count mismatch between A and b")
    n = len(A[0]) if A else 0
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    m, pivots = rref(aug)
    if n in pivots:
        return None
    free = tuple(j for j in range(n) if j not in pivots)
    reduced = tuple(tuple(m[i]) for i in range(len(pivots)))
    return LinearSolution(n=n, pivots=pivots, free=free, reduced=reduced)

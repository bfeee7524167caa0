"""Seeded sampling of bounded rationals, points and triangles.

All randomness flows through explicit :class:`random.Random` instances so a
result is a pure function of its seed.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .errors import DegenerateTriangle
from .geometry import Point2, Triangle2

MAX_RESAMPLES = 64


def derive_seed(seed: int, index: int) -> int:
    """64-bit per-trial seed, a pure function of ``(seed, index)``."""
    digest = hashlib.blake2b(f"{seed}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(rng: random.Random, bound: int) -> Fraction:
    """Numerator uniform in [-bound, bound], denominator uniform in [1, bound]."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_point(rng: random.Random, bound: int) -> Point2:
    return Point2(random_rational(rng, bound), random_rational(rng, bound))


def sample_triangle(rng: random.Random, bound: int) -> Triangle2:
    """Draw a non-degenerate triangle, widening the range after 64 collinear draws."""
    if bound < 2:
        raise ValueError("coordinate range must be at least 2")
    while True:
        for _ in range(MAX_RESAMPLES):
            try:
                return Triangle2(*(random_point(rng, bound) for _ in range(3)))
            except DegenerateTriangle:
                continue
        bound *= 2

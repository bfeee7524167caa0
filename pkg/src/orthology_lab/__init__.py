"""Exact triangle orthology: deficits, centers, constructions and experiments."""

from .constructions import circum_pedal_triangle, circumcenter, complementary_triangle, orthocenter
from .errors import OrthologyLabError
from .explorer import TrialConfig, run_search, verify_finding
from .geometry import HPoint, Line2, Point2, Triangle2, Vec2
from .homology import homology_perspector, homology_spectrum, is_homological
from .orthology import (
    Correspondence,
    TrianglePair,
    cyclic_deficit_sum,
    deficit,
    generate_biorthologic,
    is_biorthologic,
    is_orthologic,
    orthology_center,
    orthology_spectrum,
    pantazi_verdict,
)

__version__ = "0.1.0"

__all__ = [
    "Correspondence",
    "HPoint",
    "Line2",
    "OrthologyLabError",
    "Point2",
    "TrialConfig",
    "Triangle2",
    "TrianglePair",
    "Vec2",
    "circum_pedal_triangle",
    "circumcenter",
    "complementary_triangle",
    "cyclic_deficit_sum",
    "deficit",
    "generate_biorthologic",
    "homology_perspector",
    "homology_spectrum",
    "is_biorthologic",
    "is_homological",
    "is_orthologic",
    "orthocenter",
    "orthology_center",
    "orthology_spectrum",
    "pantazi_verdict",
    "run_search",
    "verify_finding",
]

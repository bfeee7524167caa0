"""Static SVG diagrams of a triangle pair and its perpendicular pencil.

Styling is fixed so identical inputs give byte-identical files:

    triangle1      stroke #1f4e79
    triangle2      stroke #b03a2e
    perpendiculars stroke #2e7d32, dashed
    center         fill #000000

Stroke widths, marker radii and font size are fractions (0.004, 0.012,
0.035) of the larger viewBox side.
"""

from __future__ import annotations

from typing import Optional

from .geometry import HPoint, Line2, Triangle2
from .orthology import Correspondence, TrianglePair, deficit, orthology_center, perpendicular_pencil

TRIANGLE1_COLOR = "#1f4e79"
TRIANGLE2_COLOR = "#b03a2e"
PENCIL_COLOR = "#2e7d32"
CENTER_COLOR = "#000000"
MARGIN = 0.10


def _fmt(v: float) -> str:
    text = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _clip(line: Line2, box) -> Optional[tuple[float, float, float, float]]:
    """Segment of ``line`` inside the axis-aligned ``box`` (Liang-Barsky)."""
    a, b, c = float(line.a), float(line.b), float(line.c)
    n2 = a * a + b * b
    x0, y0 = -a * c / n2, -b * c / n2
    dx, dy = -b, a
    xmin, ymin, xmax, ymax = box
    lo, hi = float("-inf"), float("inf")
    for p, q in ((-dx, x0 - xmin), (dx, xmax - x0), (-dy, y0 - ymin), (dy, ymax - y0)):
        if p == 0:
            if q < 0:
                return None
            continue
        t = q / p
        if p < 0:
            lo = max(lo, t)
        else:
            hi = min(hi, t)
    if lo > hi:
        return None
    return (x0 + lo * dx, y0 + lo * dy, x0 + hi * dx, y0 + hi * dy)


def render_pair(pair: TrianglePair, corr: Correspondence = Correspondence.SIGMA0) -> str:
    t1, t2 = pair.t1, pair.t2
    pencil = perpendicular_pencil(pair, corr)
    center: Optional[HPoint] = None
    if deficit(pair, corr) == 0:
        center = orthology_center(pair, corr)

    pts = [(float(v.x), float(v.y)) for v in t1.vertices + t2.vertices]
    if center is not None and center.is_finite:
        pts.append((float(center.X), float(center.Y)))
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    extent = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    m = MARGIN * extent
    box = (min(xs) - m, min(ys) - m, max(xs) + m, max(ys) + m)
    width, height = box[2] - box[0], box[3] - box[1]
    size = max(width, height)
    stroke, radius, font = 0.004 * size, 0.012 * size, 0.035 * size

    # SVG y grows downward; every y is emitted negated
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(box[0])} {_fmt(-box[3])} {_fmt(width)} {_fmt(height)}">',
        f"<title>orthology diagram, correspondence {corr.label}</title>",
    ]

    def polygon(t: Triangle2, color: str, cls: str):
        coords = " ".join(f"{_fmt(float(v.x))},{_fmt(-float(v.y))}" for v in t.vertices)
        out.append(
            f'<polygon class="{cls}" points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="{_fmt(stroke)}"/>'
        )

    polygon(t1, TRIANGLE1_COLOR, "triangle1")
    polygon(t2, TRIANGLE2_COLOR, "triangle2")
    for line in pencil:
        seg = _clip(line, box)
        if seg is None:
            continue
        x1, y1, x2, y2 = seg
        out.append(
            f'<line class="perpendicular" x1="{_fmt(x1)}" y1="{_fmt(-y1)}" x2="{_fmt(x2)}" y2="{_fmt(-y2)}" '
            f'stroke="{PENCIL_COLOR}" stroke-width="{_fmt(stroke)}" '
            f'stroke-dasharray="{_fmt(4 * stroke)} {_fmt(2 * stroke)}"/>'
        )
    for t, color, names in ((t1, TRIANGLE1_COLOR, ("A", "B", "C")), (t2, TRIANGLE2_COLOR, ("A1", "B1", "C1"))):
        for v, name in zip(t.vertices, names):
            x, y = _fmt(float(v.x)), _fmt(-float(v.y))
            out.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="{_fmt(radius)}" fill="{color}"/>')
            out.append(
                f'<text x="{x}" y="{y}" dx="{_fmt(radius)}" dy="{_fmt(-radius)}" '
                f'font-size="{_fmt(font)}" fill="{color}">{name}</text>'
            )
    if center is not None and center.is_finite:
        x, y = _fmt(float(center.X)), _fmt(-float(center.Y))
        out.append(f'<circle class="center" cx="{x}" cy="{y}" r="{_fmt(1.5 * radius)}" fill="{CENTER_COLOR}"/>')
        out.append(
            f'<text x="{x}" y="{y}" dx="{_fmt(radius)}" dy="{_fmt(-radius)}" '
            f'font-size="{_fmt(font)}" fill="{CENTER_COLOR}">P</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""JSON forms of exact values, pair documents and reports.

Rationals always travel as canonical ``"p/q"`` strings; integers are
accepted on input.  Approximate values are objects carrying ``"approx": true``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Union

from .constructions import ApproxPoint, Circle
from .errors import DegenerateTriangle, ParseError
from .geometry import HPoint, Point2, Triangle2, as_rational, format_rational
from .homology import HomologyReport
from .orthology import OrthologyReport, TrianglePair
from .space3d import Point3, Triangle3

SCHEMA = "orthology-lab/1"

_RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+/[1-9][0-9]*$"}
_RATIONAL_IN = {"oneOf": [{"type": "string"}, {"type": "integer"}]}
_POINT_OUT = {"type": "array", "items": _RATIONAL, "minItems": 2, "maxItems": 3}
_HPOINT = {
    "oneOf": [
        {
            "type": "object",
            "properties": {"finite": {"const": True}, "point": _POINT_OUT},
            "required": ["finite", "point"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"finite": {"const": False}, "direction": _POINT_OUT},
            "required": ["finite", "direction"],
            "additionalProperties": False,
        },
    ]
}
_TRIANGLE_IN = {
    "type": "object",
    "properties": {
        k: {"type": "array", "items": _RATIONAL_IN, "minItems": 2, "maxItems": 3} for k in "ABC"
    },
    "required": ["A", "B", "C"],
}

PAIR_DOCUMENT_SCHEMA = {
    "type": "object",
    "properties": {
        "schema": {"const": SCHEMA},
        "triangle1": _TRIANGLE_IN,
        "triangle2": _TRIANGLE_IN,
        "metadata": {"type": "object"},
    },
    "required": ["schema", "triangle1", "triangle2"],
}

ORTHOLOGY_REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "correspondence": {"enum": ["σ0", "σ1", "σ2", "τ0", "τ1", "τ2"]},
                    "deficit": _RATIONAL,
                    "orthologic": {"type": "boolean"},
                    "center": {"oneOf": [{"type": "null"}, _HPOINT]},
                    "degenerate": {"type": ["string", "null"]},
                },
                "required": ["correspondence", "deficit", "orthologic", "center"],
            },
        },
        "k_count": {"type": "integer", "minimum": 0, "maximum": 6},
        "cyclic_k_count": {"type": "integer", "minimum": 0, "maximum": 3},
    },
    "required": ["entries", "k_count", "cyclic_k_count"],
}

HOMOLOGY_REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "correspondence": {"enum": ["σ0", "σ1", "σ2", "τ0", "τ1", "τ2"]},
                    "homological": {"type": "boolean"},
                    "perspector": {"oneOf": [{"type": "null"}, _HPOINT]},
                    "degenerate": {"type": "boolean"},
                },
                "required": ["correspondence", "homological", "perspector", "degenerate"],
            },
        },
        "k_count": {"type": "integer", "minimum": 0, "maximum": 6},
        "cyclic_k_count": {"type": "integer", "minimum": 0, "maximum": 3},
    },
    "required": ["entries", "k_count", "cyclic_k_count"],
}

CHECK_REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "schema": {"const": SCHEMA},
        "orthology": ORTHOLOGY_REPORT_SCHEMA,
        "homology": HOMOLOGY_REPORT_SCHEMA,
    },
    "required": ["schema", "orthology"],
}

FINDING_SCHEMA = {
    "type": "object",
    "properties": {
        "schema": {"const": SCHEMA},
        "question": {"enum": ["Q1", "Q2", "Q2o", "Q3", "Q4"]},
        "trial": {"type": "integer", "minimum": 0},
        "seed": {"type": "integer"},
        "inputs": {"type": "object"},
        "spectra": {"type": "object"},
        "verdict": {"type": "object"},
        "exact": {"type": "boolean"},
    },
    "required": ["schema", "question", "trial", "seed", "inputs", "spectra", "verdict", "exact"],
    "additionalProperties": False,
}


_SCALAR = r'(?:"[^"\n]*"|-?[0-9][0-9.eE+-]*|true|false|null)'
_FLAT_ARRAY = re.compile(r"\[\s+(" + _SCALAR + r"(?:,\s+" + _SCALAR + r")*)\s+\]")


def dumps(obj: Any) -> str:
    """Deterministic pretty JSON with a trailing newline; scalar arrays stay on one line."""
    text = json.dumps(obj, ensure_ascii=False, indent=2)
    text = _FLAT_ARRAY.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)
    return text + "\n"


def dumps_line(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def rational_from_json(value, where: str):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError(f"{where}: expected a rational string or integer, got {value!r}")
    try:
        return as_rational(value)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from None


def point_to_json(p) -> list[str]:
    return [format_rational(c) for c in p]


def point_from_json(value, where: str) -> Union[Point2, Point3]:
    if not isinstance(value, list) or len(value) not in (2, 3):
        raise ParseError(f"{where}: expected an array of 2 or 3 rationals")
    coords = [rational_from_json(v, f"{where}[{i}]") for i, v in enumerate(value)]
    return Point2(*coords) if len(coords) == 2 else Point3(*coords)


def triangle_to_json(t) -> dict:
    return {name: point_to_json(v) for name, v in zip("ABC", t.vertices)}


def triangle_from_json(value, where: str) -> Union[Triangle2, Triangle3]:
    if not isinstance(value, dict):
        raise ParseError(f"{where}: expected an object with keys A, B, C")
    pts = []
    for name in "ABC":
        if name not in value:
            raise ParseError(f"{where}.{name}: missing vertex")
        pts.append(point_from_json(value[name], f"{where}.{name}"))
    if len({type(p) for p in pts}) != 1:
        raise ParseError(f"{where}: vertices mix 2D and 3D coordinates")
    cls = Triangle2 if isinstance(pts[0], Point2) else Triangle3
    try:
        return cls(*pts)
    except DegenerateTriangle:
        raise ParseError(f"{where}: vertices are collinear") from None


@dataclass(frozen=True)
class PairDocument:
    triangle1: Union[Triangle2, Triangle3]
    triangle2: Union[Triangle2, Triangle3]
    metadata: dict = field(default_factory=dict)
    schema: str = SCHEMA

    @property
    def is_planar(self) -> bool:
        return isinstance(self.triangle1, Triangle2)

    def pair(self) -> TrianglePair:
        return TrianglePair(self.triangle1, self.triangle2)

    def to_json(self) -> dict:
        doc = {
            "schema": self.schema,
            "triangle1": triangle_to_json(self.triangle1),
            "triangle2": triangle_to_json(self.triangle2),
        }
        if self.metadata:
            doc["metadata"] = self.metadata
        return doc

    @classmethod
    def from_json(cls, data) -> PairDocument:
        if not isinstance(data, dict):
            raise ParseError("document: expected a JSON object")
        schema = data.get("schema", SCHEMA)
        if schema != SCHEMA:
            raise ParseError(f"schema: unsupported version {schema!r}")
        t1 = triangle_from_json(data.get("triangle1"), "triangle1")
        t2 = triangle_from_json(data.get("triangle2"), "triangle2")
        if type(t1) is not type(t2):
            raise ParseError("triangle2: dimension differs from triangle1")
        metadata = data.get("metadata", {})
        if not isinstance(metadata, dict):
            raise ParseError("metadata: expected an object")
        return cls(t1, t2, metadata, schema)


def parse_pair_text(text: str) -> PairDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"document: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return PairDocument.from_json(data)


def hpoint_to_json(h: HPoint | None):
    if h is None:
        return None
    if h.is_finite:
        return {"finite": True, "point": [format_rational(h.X), format_rational(h.Y)]}
    return {"finite": False, "direction": [format_rational(h.X), format_rational(h.Y)]}


def orthology_report_to_json(report: OrthologyReport) -> dict:
    return {
        "entries": [
            {
                "correspondence": e.correspondence.label,
                "deficit": format_rational(e.deficit),
                "orthologic": e.orthologic,
                "center": hpoint_to_json(e.center),
                "degenerate": e.degenerate,
            }
            for e in report.entries
        ],
        "k_count": report.k_count,
        "cyclic_k_count": report.cyclic_k_count,
    }


def homology_report_to_json(report: HomologyReport) -> dict:
    return {
        "entries": [
            {
                "correspondence": e.correspondence.label,
                "homological": e.homological,
                "perspector": hpoint_to_json(e.perspector),
                "degenerate": e.degenerate,
            }
            for e in report.entries
        ],
        "k_count": report.k_count,
        "cyclic_k_count": report.cyclic_k_count,
    }


def approx_to_json(p: ApproxPoint) -> dict:
    return {"x": p.x, "y": p.y, "tol": p.tol, "approx": True}


def circle_to_json(c: Circle) -> dict:
    return {"center": point_to_json(c.center), "radius_squared": format_rational(c.radius_squared)}

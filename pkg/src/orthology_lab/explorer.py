"""Seeded search harness for the k-orthology, bi-homology and 3D questions.

Each trial draws its inputs from a seed derived from ``(config.seed, trial)``
and records a :class:`Finding`.  A finding stores its inputs in the exact
JSON dialect; its spectra and verdict are a pure function of those inputs
(:func:`analyze`), which is what :func:`verify_finding` re-checks.

Questions:

``Q1``  impose k in {3, 4, 5, 6} orthology conditions on t2 as a linear
        system and solve exactly.
``Q2``  generate bi-homological pairs; record whether the third cyclic
        shift is homological too.
``Q2o`` generate bi-orthologic and bi-homological witnesses and measure
        both properties on each.
``Q3``  space pairs satisfying the σ0/σ1 deficit conditions; both
        perpendicular readings.
``Q4``  space pairs perspective under σ0; homology under the other shifts.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .errors import (
    ConfigInvalid,
    DegenerateTriangle,
    GenerationFailed,
    InvariantViolation,
    ParseError,
    PointOnLine,
)
from .geometry import Point2, Triangle2, format_rational
from .homology import generate_bihomological, homology_spectrum
from .linalg import rank, solve
from .orthology import (
    ALL_CORRESPONDENCES,
    CYCLIC,
    Correspondence,
    TrianglePair,
    generate_biorthologic,
    orthology_row,
    orthology_spectrum,
)
from .sampling import derive_seed, make_rng, random_rational, sample_triangle
from .serialize import (
    SCHEMA,
    dumps_line,
    homology_report_to_json,
    orthology_report_to_json,
    point_to_json,
    triangle_from_json,
    triangle_to_json,
)
from .space3d import (
    NoUniquePoint,
    Point3,
    Triangle3,
    coplanar_pair,
    deficit3,
    foot_lines,
    is_homological3,
    normal_plane_meet,
    random_point3,
    sample_triangle3,
    three_lines_concurrent3,
)

QUESTIONS = {
    "Q1": "Q1",
    "Q1_k_orthology": "Q1",
    "Q2": "Q2",
    "Q2_bihomology": "Q2",
    "Q2o": "Q2o",
    "Q2_orthohomology": "Q2o",
    "Q3": "Q3",
    "Q3_3d_orthology": "Q3",
    "Q4": "Q4",
    "Q4_3d_homology": "Q4",
}

SIGMA0, SIGMA1, SIGMA2 = CYCLIC
TAU0, TAU1, TAU2 = Correspondence.TAU0, Correspondence.TAU1, Correspondence.TAU2

# k-th entry: the correspondences imposed when asking for k-orthology
Q1_IMPOSED = {
    3: CYCLIC,
    4: CYCLIC + (TAU0,),
    5: CYCLIC + (TAU0, TAU1),
    6: ALL_CORRESPONDENCES,
}

FREE_DRAWS = 16


@dataclass(frozen=True)
class TrialConfig:
    question: str
    trials: int
    seed: int
    coordinate_range: int = 10

    def validated(self) -> TrialConfig:
        if self.question not in QUESTIONS:
            raise ConfigInvalid(f"unknown question {self.question!r}")
        if isinstance(self.trials, bool) or not isinstance(self.trials, int) or self.trials < 1:
            raise ConfigInvalid("trials must be a positive integer")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not -(2**63) <= self.seed < 2**64:
            raise ConfigInvalid("seed must be a 64-bit integer")
        if not isinstance(self.coordinate_range, int) or self.coordinate_range < 2:
            raise ConfigInvalid("coordinate_range must be an integer >= 2")
        return TrialConfig(QUESTIONS[self.question], self.trials, self.seed, self.coordinate_range)


@dataclass(frozen=True)
class Finding:
    question: str
    trial: int
    seed: int
    inputs: dict
    spectra: dict
    verdict: dict
    exact: bool = True

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "question": self.question,
            "trial": self.trial,
            "seed": self.seed,
            "inputs": self.inputs,
            "spectra": self.spectra,
            "verdict": self.verdict,
            "exact": self.exact,
        }

    def to_line(self) -> str:
        return dumps_line(self.to_json())

    @classmethod
    def from_json(cls, data) -> Finding:
        if not isinstance(data, dict):
            raise ParseError("finding: expected a JSON object")
        if data.get("schema") != SCHEMA:
            raise ParseError(f"schema: expected {SCHEMA!r}")
        try:
            f = cls(
                question=data["question"],
                trial=data["trial"],
                seed=data["seed"],
                inputs=data["inputs"],
                spectra=data["spectra"],
                verdict=data["verdict"],
                exact=data["exact"],
            )
        except KeyError as exc:
            raise ParseError(f"finding: missing field {exc.args[0]!r}") from None
        if f.question not in ("Q1", "Q2", "Q2o", "Q3", "Q4"):
            raise ParseError(f"question: unknown id {f.question!r}")
        if not isinstance(f.inputs, dict) or not isinstance(f.spectra, dict) or not isinstance(f.verdict, dict):
            raise ParseError("finding: inputs, spectra and verdict must be objects")
        return f

    @classmethod
    def from_line(cls, line: str) -> Finding:
        try:
            data = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"finding: invalid JSON ({exc.msg})") from None
        return cls.from_json(data)


@dataclass
class SearchResult:
    findings: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)


def _labels(corrs) -> list[str]:
    return [c.label for c in corrs]


def _corrs(labels) -> tuple[Correspondence, ...]:
    try:
        return tuple(Correspondence.parse(s) for s in labels)
    except (ValueError, AttributeError):
        raise ParseError(f"inputs: bad correspondence list {labels!r}") from None


def _triangle(data, where, dim=2):
    t = triangle_from_json(data, where)
    expected = Triangle2 if dim == 2 else Triangle3
    if not isinstance(t, expected):
        raise ParseError(f"{where}: expected a {dim}D triangle")
    return t


def _optional_triangle(data, where, dim=2):
    return None if data is None else _triangle(data, where, dim)


def _input(inputs, key):
    try:
        return inputs[key]
    except KeyError:
        raise ParseError(f"inputs: missing {key!r}") from None


# -- generation --------------------------------------------------------------


def _gen_q1(rng, bound, trial):
    t1 = sample_triangle(rng, bound)
    k = 3 + trial % 4
    imposed = Q1_IMPOSED[k]
    rows = [orthology_row(t1, c) for c in imposed]
    sol = solve(rows, [Fraction(0)] * len(rows))
    t2 = None
    for _ in range(FREE_DRAWS):
        x = sol.point([random_rational(rng, bound) for _ in sol.free])
        try:
            t2 = Triangle2(Point2(x[0], x[1]), Point2(x[2], x[3]), Point2(x[4], x[5]))
            break
        except DegenerateTriangle:
            continue
    return {
        "t1": triangle_to_json(t1),
        "imposed": _labels(imposed),
        "t2": None if t2 is None else triangle_to_json(t2),
    }


def _gen_q2(rng, bound, trial):
    t1 = sample_triangle(rng, bound)
    try:
        pair = generate_bihomological(t1, rng.getrandbits(64), coordinate_range=bound)
        t2 = triangle_to_json(pair.t2)
    except GenerationFailed:
        t2 = None
    return {"t1": triangle_to_json(t1), "t2": t2}


def _gen_q2o(rng, bound, trial):
    t1 = sample_triangle(rng, bound)
    out = {"t1": triangle_to_json(t1)}
    for key, gen in (("biorthologic_t2", generate_biorthologic), ("bihomological_t2", generate_bihomological)):
        try:
            out[key] = triangle_to_json(gen(t1, rng.getrandbits(64), coordinate_range=bound).t2)
        except GenerationFailed:
            out[key] = None
    return out


def _gen_q3(rng, bound, trial):
    t1 = sample_triangle3(rng, bound)
    rows = [orthology_row(t1, c) for c in (SIGMA0, SIGMA1)]
    sol = solve(rows, [Fraction(0)] * 2)
    t2 = None
    for _ in range(FREE_DRAWS):
        x = sol.point([random_rational(rng, bound) for _ in sol.free])
        try:
            cand = Triangle3(Point3(*x[0:3]), Point3(*x[3:6]), Point3(*x[6:9]))
        except DegenerateTriangle:
            continue
        if not coplanar_pair(t1, cand):
            t2 = cand
            break
    return {"t1": triangle_to_json(t1), "t2": None if t2 is None else triangle_to_json(t2)}


def _gen_q4(rng, bound, trial):
    t1 = sample_triangle3(rng, bound)
    t2 = center = None
    for _ in range(FREE_DRAWS):
        p = random_point3(rng, bound)
        ratios = [random_rational(rng, bound) for _ in range(3)]
        if any(r in (0, 1) for r in ratios):
            continue
        try:
            cand = Triangle3(*(p + (v - p) * r for v, r in zip(t1.vertices, ratios)))
        except DegenerateTriangle:
            continue
        if not coplanar_pair(t1, cand):
            t2, center = cand, p
            break
    return {
        "t1": triangle_to_json(t1),
        "center": None if center is None else point_to_json(center),
        "t2": None if t2 is None else triangle_to_json(t2),
    }


# -- analysis ----------------------------------------------------------------


def _analyze_q1(inputs):
    t1 = _triangle(_input(inputs, "t1"), "inputs.t1")
    imposed = _corrs(_input(inputs, "imposed"))
    t2 = _optional_triangle(_input(inputs, "t2"), "inputs.t2")
    r = rank([orthology_row(t1, c) for c in imposed])
    cyclic_rank = rank([orthology_row(t1, c) for c in CYCLIC])
    verdict = {
        "k_target": len(imposed),
        "rank": r,
        "solution_dim": 6 - r,
        "cyclic_rank": cyclic_rank,
        "solvable": t2 is not None,
    }
    spectra = {}
    if t2 is not None:
        report = orthology_spectrum(TrianglePair(t1, t2))
        spectra["orthology"] = orthology_report_to_json(report)
        achieved = set(report.orthologic_set())
        verdict["imposed_satisfied"] = all(c in achieved for c in imposed)
        verdict["k_count"] = report.k_count
        verdict["cyclic_k_count"] = report.cyclic_k_count
    return spectra, verdict


def _pair_measures(t1, t2):
    pair = TrianglePair(t1, t2)
    orth = orthology_spectrum(pair)
    hom = homology_spectrum(pair)
    o_set, h_set = orth.orthologic_set(), hom.homological_set()
    both = [c for c in o_set if c in h_set]
    spectra = {"orthology": orthology_report_to_json(orth), "homology": homology_report_to_json(hom)}
    verdict = {
        "orthologic": _labels(o_set),
        "homological": _labels(h_set),
        "orthohomological": _labels(both),
        "bi_orthologic_and_bi_homological": len(o_set) >= 2 and len(h_set) >= 2,
        "orthohomological_under_two": len(both) >= 2,
    }
    return spectra, verdict


def _analyze_q2(inputs):
    t1 = _triangle(_input(inputs, "t1"), "inputs.t1")
    t2 = _optional_triangle(_input(inputs, "t2"), "inputs.t2")
    if t2 is None:
        return {}, {"generated": False}
    spectra, measures = _pair_measures(t1, t2)
    hom = set(measures["homological"])
    verdict = {
        "generated": True,
        "bi_homological": {"σ0", "σ1"} <= hom,
        "tri_homological": {"σ0", "σ1", "σ2"} <= hom,
        "homological_k": len(hom),
        "cyclic_homological_k": len(hom & {"σ0", "σ1", "σ2"}),
        "orthologic_k": len(measures["orthologic"]),
    }
    return spectra, verdict


def _analyze_q2o(inputs):
    t1 = _triangle(_input(inputs, "t1"), "inputs.t1")
    spectra, verdict = {}, {}
    for key in ("biorthologic_t2", "bihomological_t2"):
        t2 = _optional_triangle(_input(inputs, key), f"inputs.{key}")
        name = key[: -len("_t2")]
        if t2 is None:
            verdict[name] = None
            continue
        spectra[name], verdict[name] = _pair_measures(t1, t2)
    return spectra, verdict


def _point_or_none(p):
    return None if p is None else point_to_json(p)


def _analyze_q3(inputs):
    t1 = _triangle(_input(inputs, "t1"), "inputs.t1", dim=3)
    t2 = _optional_triangle(_input(inputs, "t2"), "inputs.t2", dim=3)
    if t2 is None:
        return {}, {"generated": False}
    entries = []
    lemma, planes, transversal = [], [], []
    for corr in ALL_CORRESPONDENCES:
        d = deficit3(t1, t2, corr)
        meet = normal_plane_meet(t1, t2, corr)
        if isinstance(meet, NoUniquePoint):
            plane = {"kind": "line" if meet.consistent else "none", "rank": meet.rank}
        else:
            plane = {"kind": "point", "rank": 3, "point": point_to_json(meet)}
        try:
            ok, p = three_lines_concurrent3(*foot_lines(t1, t2, corr))
            trans = {"concurrent": ok, "point": _point_or_none(p), "degenerate": False}
        except PointOnLine:
            trans = {"concurrent": False, "point": None, "degenerate": True}
        entries.append(
            {"correspondence": corr.label, "deficit3": format_rational(d), "plane": plane, "transversal": trans}
        )
        if d == 0:
            lemma.append(corr.label)
        if plane["kind"] != "none":
            planes.append(corr.label)
        if trans["concurrent"]:
            transversal.append(corr.label)
    verdict = {
        "generated": True,
        "lemma_analog": lemma,
        "plane_reading": planes,
        "transversal_reading": transversal,
        "cyclic_lemma_k": sum(1 for c in lemma if c.startswith("σ")),
    }
    return {"space": entries}, verdict


def _analyze_q4(inputs):
    t1 = _triangle(_input(inputs, "t1"), "inputs.t1", dim=3)
    t2 = _optional_triangle(_input(inputs, "t2"), "inputs.t2", dim=3)
    if t2 is None:
        return {}, {"generated": False}
    entries, hom = [], []
    for corr in ALL_CORRESPONDENCES:
        ok, p = is_homological3(t1, t2, corr)
        entries.append({"correspondence": corr.label, "homological": ok, "perspector": _point_or_none(p)})
        if ok:
            hom.append(corr.label)
    verdict = {
        "generated": True,
        "homological": hom,
        "homological_k": len(hom),
        "cyclic_homological_k": sum(1 for c in hom if c.startswith("σ")),
        "coplanar": coplanar_pair(t1, t2),
    }
    return {"space_homology": entries}, verdict


_GENERATORS = {"Q1": _gen_q1, "Q2": _gen_q2, "Q2o": _gen_q2o, "Q3": _gen_q3, "Q4": _gen_q4}
_ANALYZERS = {"Q1": _analyze_q1, "Q2": _analyze_q2, "Q2o": _analyze_q2o, "Q3": _analyze_q3, "Q4": _analyze_q4}


def analyze(question: str, inputs: dict) -> tuple[dict, dict]:
    """Spectra and verdict of a trial, recomputed from its serialized inputs."""
    return _ANALYZERS[question](inputs)


def _check_invariants(question: str, verdict: dict) -> None:
    if question == "Q1":
        if verdict["cyclic_rank"] > 2:
            raise InvariantViolation(f"cyclic orthology system has rank {verdict['cyclic_rank']} > 2")
        if verdict["solvable"] and not verdict["imposed_satisfied"]:
            raise InvariantViolation("solved t2 violates an imposed orthology condition")
    elif question == "Q3" and verdict.get("generated"):
        if verdict["cyclic_lemma_k"] != 3:
            raise InvariantViolation("σ0/σ1 deficits vanish but σ2 does not")


def run_trial(config: TrialConfig, trial: int) -> Finding:
    seed = derive_seed(config.seed, trial)
    rng = make_rng(seed)
    inputs = _GENERATORS[config.question](rng, config.coordinate_range, trial)
    spectra, verdict = analyze(config.question, inputs)
    _check_invariants(config.question, verdict)
    return Finding(config.question, trial, seed, inputs, spectra, verdict)


def _run_trial_args(args):
    return run_trial(*args)


def iter_findings(config: TrialConfig, workers: int = 1) -> Iterator[Finding]:
    """Findings in trial order; trials may run on a process pool."""
    config = config.validated()
    if workers <= 1:
        for i in range(config.trials):
            yield run_trial(config, i)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_run_trial_args, ((config, i) for i in range(config.trials)), chunksize=16)


def _fraction_text(num: int, den: int) -> Optional[str]:
    return None if den == 0 else format_rational(Fraction(num, den))


def summarize(config: TrialConfig, findings: list[Finding]) -> dict:
    config = config.validated()
    summary = {
        "schema": SCHEMA,
        "question": config.question,
        "trials": len(findings),
        "seed": config.seed,
        "coordinate_range": config.coordinate_range,
    }
    verdicts = [f.verdict for f in findings]
    q = config.question
    if q == "Q1":
        by_k = {}
        for v in verdicts:
            slot = by_k.setdefault(
                str(v["k_target"]), {"trials": 0, "solvable": 0, "rank": {}, "achieved_k_count": {}}
            )
            slot["trials"] += 1
            slot["rank"][str(v["rank"])] = slot["rank"].get(str(v["rank"]), 0) + 1
            if v["solvable"]:
                slot["solvable"] += 1
                key = str(v["k_count"])
                slot["achieved_k_count"][key] = slot["achieved_k_count"].get(key, 0) + 1
        for slot in by_k.values():
            slot["rank"] = dict(sorted(slot["rank"].items()))
            slot["achieved_k_count"] = dict(sorted(slot["achieved_k_count"].items()))
        summary["by_k"] = dict(sorted(by_k.items()))
        summary["max_cyclic_rank"] = max(v["cyclic_rank"] for v in verdicts)
        k3 = [v for v in verdicts if v["k_target"] == 3 and v["solvable"]]
        summary["tri_orthologic_given_k3_solvable"] = _fraction_text(
            sum(1 for v in k3 if v["cyclic_k_count"] == 3), len(k3)
        )
    elif q == "Q2":
        gen = [v for v in verdicts if v["generated"]]
        tri = sum(1 for v in gen if v["tri_homological"])
        summary["generated"] = len(gen)
        summary["bi_homological"] = sum(1 for v in gen if v["bi_homological"])
        summary["tri_homological"] = tri
        summary["tri_homology_frequency"] = _fraction_text(tri, len(gen))
        hist = {}
        for v in gen:
            hist[str(v["homological_k"])] = hist.get(str(v["homological_k"]), 0) + 1
        summary["homological_k_histogram"] = dict(sorted(hist.items()))
        summary["also_orthologic"] = sum(1 for v in gen if v["orthologic_k"] > 0)
    elif q == "Q2o":
        for name in ("biorthologic", "bihomological"):
            gen = [v[name] for v in verdicts if v[name] is not None]
            summary[name] = {
                "generated": len(gen),
                "bi_orthologic_and_bi_homological": sum(1 for v in gen if v["bi_orthologic_and_bi_homological"]),
                "orthohomological_under_two": sum(1 for v in gen if v["orthohomological_under_two"]),
                "orthohomological_under_one": sum(1 for v in gen if v["orthohomological"]),
            }
    elif q == "Q3":
        gen = [v for v in verdicts if v["generated"]]
        summary["generated"] = len(gen)
        for key in ("lemma_analog", "plane_reading", "transversal_reading"):
            counts = {c.label: 0 for c in ALL_CORRESPONDENCES}
            for v in gen:
                for label in v[key]:
                    counts[label] += 1
            summary[key] = counts
    elif q == "Q4":
        gen = [v for v in verdicts if v["generated"]]
        hist = {}
        for v in gen:
            hist[str(v["homological_k"])] = hist.get(str(v["homological_k"]), 0) + 1
        summary["generated"] = len(gen)
        summary["homological_k_histogram"] = dict(sorted(hist.items()))
        summary["bi_homological_non_coplanar"] = sum(
            1 for v in gen if v["cyclic_homological_k"] >= 2 and not v["coplanar"]
        )
    return summary


def run_search(config: TrialConfig, workers: int = 1) -> SearchResult:
    findings = list(iter_findings(config, workers))
    return SearchResult(findings, summarize(config, findings))


def verify_finding(record) -> bool:
    """Recompute a finding from its inputs; True iff spectra and verdict match."""
    if isinstance(record, Finding):
        f = record
    elif isinstance(record, str):
        f = Finding.from_line(record)
    else:
        f = Finding.from_json(record)
    spectra, verdict = analyze(f.question, f.inputs)
    return spectra == f.spectra and verdict == f.verdict

"""Command-line entry point: ``orthology-lab {check,construct,generate,search,render}``.

Exit codes: 0 computed (whatever the verdict), 1 internal or generation
failure, 2 invalid input or configuration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions as cons
from .errors import GenerationFailed, InvariantViolation, OrthologyLabError, ParseError
from .explorer import QUESTIONS, TrialConfig, analyze, iter_findings, summarize
from .geometry import Triangle2, format_rational
from .homology import generate_bihomological, homology_spectrum
from .orthology import ALL_CORRESPONDENCES, Correspondence, TrianglePair, generate_biorthologic, orthology_spectrum
from .render import render_pair
from .sampling import derive_seed, make_rng, sample_triangle
from .serialize import (
    SCHEMA,
    PairDocument,
    approx_to_json,
    circle_to_json,
    dumps,
    homology_report_to_json,
    orthology_report_to_json,
    parse_pair_text,
    point_from_json,
    point_to_json,
    triangle_from_json,
    triangle_to_json,
)

SEED_ENV = "ORTHOLOGY_LAB_SEED"

CORRESPONDENCE_HELP = (
    "vertex correspondence: σ0 (A,B,C -> A1,B1,C1), σ1 (A,B,C -> B1,C1,A1, i.e. the "
    "triangle B1C1A1), σ2 (-> C1A1B1), τ0/τ1/τ2 (transpositions fixing A/B/C), or 'all'. "
    "ASCII aliases s0..s2, t0..t2 are accepted."
)


class UsageError(Exception):
    """Invalid input or configuration; maps to exit code 2."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_pair(path: str) -> PairDocument:
    return parse_pair_text(_read_text(path))


def _load_triangle(path: str):
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise ParseError(f"document: invalid JSON ({exc.msg})") from None
    if not isinstance(data, dict):
        raise ParseError("document: expected a JSON object")
    if "triangle" in data:
        return triangle_from_json(data["triangle"], "triangle")
    return triangle_from_json(data.get("triangle1"), "triangle1")


def _correspondences(text: str):
    if text.strip().lower() == "all":
        return ALL_CORRESPONDENCES
    try:
        return (Correspondence.parse(text),)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _seed(value):
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{SEED_ENV}={env!r} is not an integer") from None
    return value


def _center_text(h) -> str:
    if h is None:
        return "-"
    prefix = "" if h.is_finite else "direction "
    return prefix + f"{format_rational(h.X)},{format_rational(h.Y)}"


def cmd_check(args) -> int:
    doc = _load_pair(args.input)
    corrs = _correspondences(args.correspondence)
    if not doc.is_planar:
        spectra, verdict = analyze(
            "Q3", {"t1": triangle_to_json(doc.triangle1), "t2": triangle_to_json(doc.triangle2)}
        )
        wanted = {c.label for c in corrs}
        entries = [e for e in spectra["space"] if e["correspondence"] in wanted]
        if args.format == "json":
            sys.stdout.write(dumps({"schema": SCHEMA, "space": entries}))
        else:
            for e in entries:
                print(
                    f"{e['correspondence']}  deficit3 {e['deficit3']}  plane {e['plane']['kind']}  "
                    f"transversal {'concurrent' if e['transversal']['concurrent'] else 'not concurrent'}"
                )
        return 0
    pair = doc.pair()
    orth = orthology_spectrum(pair, corrs)
    hom = homology_spectrum(pair, corrs) if args.homology else None
    if args.format == "json":
        report = {"schema": SCHEMA, "orthology": orthology_report_to_json(orth)}
        if hom is not None:
            report["homology"] = homology_report_to_json(hom)
        sys.stdout.write(dumps(report))
        return 0
    for e in orth.entries:
        verdict = "orthologic" if e.orthologic else "not orthologic"
        print(f"{e.correspondence.label}  {verdict:<14}  deficit {format_rational(e.deficit)}  center {_center_text(e.center)}")
    print(f"k_count {orth.k_count} (cyclic {orth.cyclic_k_count})")
    if hom is not None:
        for e in hom.entries:
            verdict = "homological" if e.homological else "not homological"
            flag = "  degenerate" if e.degenerate else ""
            print(f"{e.correspondence.label}  {verdict:<15}  perspector {_center_text(e.perspector)}{flag}")
        print(f"homological k_count {hom.k_count} (cyclic {hom.cyclic_k_count})")
    return 0


def cmd_construct(args) -> int:
    t = _load_triangle(args.input)
    if not isinstance(t, Triangle2):
        raise UsageError("constructions need a planar triangle")
    kind = args.kind
    if kind == "medial":
        result = triangle_to_json(cons.complementary_triangle(t))
    elif kind == "orthocenter":
        result = point_to_json(cons.orthocenter(t))
    elif kind == "circumcenter":
        result = point_to_json(cons.circumcenter(t))
    elif kind == "circumcircle":
        result = circle_to_json(cons.circumcircle(t))
    elif kind == "circumpedal":
        if args.point is None:
            raise UsageError("circumpedal requires --point x,y")
        parts = args.point.split(",")
        if len(parts) != 2:
            raise UsageError("--point must be 'x,y'")
        d = point_from_json(parts, "--point")
        result = triangle_to_json(cons.circum_pedal_triangle(t, d))
    else:
        result = approx_to_json(cons.incenter_approx(t))
    out = {"schema": SCHEMA, "construction": kind, "input": triangle_to_json(t), "result": result}
    if kind == "incenter":
        out["approx"] = True
    sys.stdout.write(dumps(out))
    return 0


def cmd_generate(args) -> int:
    seed = _seed(args.seed)
    if args.range < 2:
        raise UsageError("--range must be at least 2")
    if args.base == "random":
        t1 = sample_triangle(make_rng(derive_seed(seed, 0)), args.range)
    else:
        t1 = _load_triangle(args.base)
        if not isinstance(t1, Triangle2):
            raise UsageError("base triangle must be planar")
    kind = "bi-orthologic" if args.bi_orthologic else "bi-homological"
    gen = generate_biorthologic if args.bi_orthologic else generate_bihomological
    pair = gen(t1, seed, coordinate_range=args.range)
    meta = {"generator": kind, "seed": seed, "base": "random" if args.base == "random" else "file"}
    sys.stdout.write(dumps(PairDocument(pair.t1, pair.t2, meta).to_json()))
    return 0


def cmd_search(args) -> int:
    config = TrialConfig(args.question, args.trials, _seed(args.seed), args.range).validated()
    out = Path(args.out)
    summary_path = Path(args.summary) if args.summary else out.with_suffix(".summary.json")
    findings = []
    try:
        with out.open("w", encoding="utf-8") as fh:
            for f in iter_findings(config, args.workers):
                fh.write(f.to_line() + "\n")
                findings.append(f)
        summary = summarize(config, findings)
        summary_path.write_text(dumps(summary), encoding="utf-8")
    except BaseException:
        for p in (out, summary_path):
            if p.exists():
                p.unlink()
        raise
    sys.stdout.write(dumps(summary))
    return 0


def cmd_render(args) -> int:
    doc = _load_pair(args.input)
    if not doc.is_planar:
        raise UsageError("render supports planar pairs only")
    corr = _correspondences(args.correspondence)
    if len(corr) != 1:
        raise UsageError("render needs a single correspondence")
    svg = render_pair(TrianglePair(doc.triangle1, doc.triangle2), corr[0])
    if args.out == "-":
        sys.stdout.write(svg)
    else:
        Path(args.out).write_text(svg, encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthology-lab",
        description="Exact orthology and homology of triangle pairs.",
        epilog=f"Environment: {SEED_ENV} overrides --seed when set.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="orthology (and homology) verdicts for a pair document")
    p.add_argument("input", help="pair document path, or - for stdin")
    p.add_argument("--correspondence", default="all", help=CORRESPONDENCE_HELP)
    p.add_argument("--homology", action="store_true", help="also report perspectivity")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--text", dest="format", action="store_const", const="text")
    p.set_defaults(func=cmd_check, format="json")

    p = sub.add_parser("construct", help="named constructions on triangle1 of a document")
    p.add_argument("kind", choices=["medial", "orthocenter", "circumcenter", "circumcircle", "circumpedal", "incenter"])
    p.add_argument("input")
    p.add_argument("--point", help="interior point 'x,y' for circumpedal, rationals as p/q")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("generate", help="emit a seeded witness pair")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--bi-orthologic", action="store_true")
    kind.add_argument("--bi-homological", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--base", default="random", help="document whose triangle1 is kept, or 'random'")
    p.add_argument("--range", type=int, default=10, help="bound on sampled numerators/denominators")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("search", help="run an open-question experiment")
    p.add_argument("--question", required=True, choices=sorted(QUESTIONS))
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--range", type=int, default=10)
    p.add_argument("--out", required=True, help="line-delimited findings file")
    p.add_argument("--summary", help="summary path (default: <out>.summary.json)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("render", help="SVG diagram of a planar pair")
    p.add_argument("input")
    p.add_argument("--out", required=True, help="SVG path, or - for stdout")
    p.add_argument("--correspondence", default="σ0", help=CORRESPONDENCE_HELP)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, OrthologyLabError) as exc:
        if isinstance(exc, GenerationFailed):
            print(f"error: GenerationFailed: {exc}", file=sys.stderr)
            return 1
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

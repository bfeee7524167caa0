import json
from fractions import Fraction as F

import jsonschema
import pytest

from orthology_lab.errors import ConfigInvalid, ParseError
from orthology_lab.explorer import Finding, TrialConfig, iter_findings, run_search, run_trial, verify_finding
from orthology_lab.sampling import derive_seed, make_rng, sample_triangle
from orthology_lab.serialize import FINDING_SCHEMA, format_rational
from orthology_lab.space3d import sample_triangle3


def test_sample_triangle_deterministic():
    a = sample_triangle(make_rng(7), 10)
    b = sample_triangle(make_rng(7), 10)
    assert a == b
    for seed in range(50):
        sample_triangle(make_rng(seed), 2)  # never raises on tiny ranges
        sample_triangle3(make_rng(seed), 2)


def test_derived_seeds_are_pure():
    assert derive_seed(5, 3) == derive_seed(5, 3)
    assert derive_seed(5, 3) != derive_seed(5, 4)


@pytest.mark.parametrize(
    "cfg",
    [
        TrialConfig("Q1", 0, 1),
        TrialConfig("Q1", 3, 1, coordinate_range=1),
        TrialConfig("Q9", 3, 1),
        TrialConfig("Q2", 3, 2**64),
    ],
)
def test_config_validation(cfg):
    with pytest.raises(ConfigInvalid):
        cfg.validated()


def test_question_aliases():
    assert TrialConfig("Q2_orthohomology", 1, 0).validated().question == "Q2o"


def test_single_trial_gives_one_finding():
    res = run_search(TrialConfig("Q1", 1, 3))
    assert len(res.findings) == 1 and res.summary["trials"] == 1


@pytest.mark.parametrize("question", ["Q1", "Q2", "Q2o", "Q3", "Q4"])
def test_findings_verify_and_validate(question):
    for f in iter_findings(TrialConfig(question, 8, 21)):
        line = f.to_line()
        jsonschema.validate(json.loads(line), FINDING_SCHEMA)
        assert verify_finding(line)
        assert Finding.from_line(line) == f


def test_search_is_deterministic():
    cfg = TrialConfig("Q1", 12, 99)
    a = [f.to_line() for f in iter_findings(cfg)]
    b = [f.to_line() for f in iter_findings(cfg)]
    assert a == b
    # trials are order independent: trial 5 alone reproduces the stream entry
    assert run_trial(cfg.validated(), 5).to_line() == a[5]


def test_parallel_matches_serial():
    cfg = TrialConfig("Q2", 6, 4)
    assert [f.to_line() for f in iter_findings(cfg, workers=2)] == [f.to_line() for f in iter_findings(cfg)]


def test_q1_rank_law_and_summary():
    res = run_search(TrialConfig("Q1", 16, 8))
    assert res.summary["max_cyclic_rank"] <= 2
    for f in res.findings:
        v = f.verdict
        assert v["cyclic_rank"] <= 2
        if v["k_target"] == 3:
            assert v["solvable"] and v["cyclic_k_count"] == 3
    assert res.summary["tri_orthologic_given_k3_solvable"] == "1/1"


def test_q2_summary_has_frequency():
    res = run_search(TrialConfig("Q2", 5, 1))
    assert "tri_homology_frequency" in res.summary


def _mutant(line: str) -> str:
    data = json.loads(line)
    a = data["inputs"]["t2"]["A"]
    a[0] = format_rational(F(a[0].split("/")[0]) / F(a[0].split("/")[1]) + 1)
    return json.dumps(data)


def test_perturbed_finding_fails_verification():
    f = next(iter_findings(TrialConfig("Q1", 1, 0)))
    assert f.verdict["k_target"] == 3
    mutant = _mutant(f.to_line())
    # shifting A1 by (1, 0) changes the σ0 deficit by C - B projected on x, nonzero here
    assert not verify_finding(mutant)


def test_truncated_record_raises():
    line = next(iter_findings(TrialConfig("Q2", 1, 0))).to_line()
    with pytest.raises(ParseError):
        verify_finding(line[: len(line) // 2])
    with pytest.raises(ParseError):
        verify_finding('{"schema": "orthology-lab/1", "question": "Q1"}')

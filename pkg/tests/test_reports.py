import numpy as np
import pytest

from cyclotomic.field import root_of_unity
from cyclotomic.linalg import CycMatrix
from hopf.families import build_H2n2
from algebras.standardActions import standard_action
from representations.labels import RepLabel
from reports.orchestrator import VerifyOrchestrator, outcome_frame, verify_document
from reports.schema import validate_document
from reports.theoremCases import (
    REGISTRY,
    case_degree_bound,
    case_ids,
    get_case,
    parse_range,
    plus_hilbert_head,
    run_case,
    validate_values,
)
from utils.errors import HopfEngineError, ParameterOutOfRange
from utils.jsonIO import dumps, loads, write_document


def test_json_encoding_of_engine_values():
    doc = {
        "zeta": root_of_unity(4, 1),
        "matrix": CycMatrix.identity(2, 3),
        "label": RepLabel("B4m", "pi", (1,)),
        "count": np.int64(3),
        "labels": {RepLabel("H2n2", "T", (0, 1))},
    }
    plain = loads(dumps(doc))
    assert plain["zeta"] == {"conductor": 4, "coefficients": ["0", "1"]}
    assert len(plain["matrix"]) == 2
    assert plain["label"] == "pi_1"
    assert plain["count"] == 3
    assert plain["labels"] == ["T0+"]


def test_write_document_uses_report_dir(tmp_path):
    path = write_document({"a": 1}, "out.json", str(tmp_path / "reports"))
    assert path == str(tmp_path / "reports" / "out.json")
    assert loads(open(path, "rb").read()) == {"a": 1}


def test_schema_rejects_malformed_documents():
    with pytest.raises(HopfEngineError):
        validate_document({"schema": "hopf-reflections/1", "kind": "verify", "passed": "yes", "outcomes": []}, "verify")
    validate_document({"schema": "hopf-reflections/1", "kind": "verify", "passed": True, "outcomes": []}, "verify")


def test_registry_is_sorted_and_complete():
    ids = case_ids()
    assert ids == sorted(ids)
    for expected in ("H2n2.fusion", "B4m.fixed.plus", "A4mEven.inner-faithful", "lemma.skew", "ore.trivial-t"):
        assert expected in REGISTRY


def test_unknown_case():
    with pytest.raises(ParameterOutOfRange):
        get_case("H2n2.nonexistent")


@pytest.mark.parametrize(
    "text, expected",
    [("m=2,4,6", (2, 4, 6)), ("m=2..5", (2, 3, 4, 5)), (" m = 2..3, 6 ", (2, 3, 6))],
)
def test_parse_range(text, expected):
    assert parse_range(text, get_case("B4m.fusion")) == expected


@pytest.mark.parametrize("text", ["n=2,3", "m=", "m:2"])
def test_parse_range_rejects(text):
    with pytest.raises(ParameterOutOfRange):
        parse_range(text, get_case("B4m.fusion"))


def test_values_outside_a_case_are_rejected():
    with pytest.raises(ParameterOutOfRange):
        validate_values(get_case("A4mOdd.fusion"), [3, 4])
    with pytest.raises(ParameterOutOfRange):
        validate_values(get_case("H8.fixed"), [3])
    validate_values(get_case("A4mEven.fusion"), [2, 4])


def test_plus_hilbert_head():
    assert plus_hilbert_head(2) == [1, 0, 0, 0, 2, 0, 1]
    assert plus_hilbert_head(3) == [1, 0, 0, 0, 1, 0, 1, 0, 2]


@pytest.mark.parametrize(
    "case_id, value",
    [("H2n2.catalog", 3), ("B4m.inner-faithful", 3), ("A4mEven.noncommutative", 4), ("H8.B8.iso", 2),
     ("lemma.binomial", 5), ("ore.rejects-nontrivial", 4), ("B4m.groth-iso", 3)],
)
def test_cases_pass(case_id, value):
    outcome = run_case(get_case(case_id), value)
    assert outcome.passed, outcome.detail


def test_orchestrator_sweep():
    state = VerifyOrchestrator(progress=False).run([
        {"case_id": "lemma.binomial", "values": [3, 1, 2]},
        {"case_id": "B4m.catalog", "values": [2]},
    ])
    assert state["status"] == "completed"
    assert state["passed"]
    assert [(o["case_id"], o["value"]) for o in state["outcomes"]] == [
        ("B4m.catalog", 2), ("lemma.binomial", 1), ("lemma.binomial", 2), ("lemma.binomial", 3),
    ]
    frame = outcome_frame(state["outcomes"])
    assert list(frame["result"]) == ["PASS"] * 4
    validate_document(loads(dumps(verify_document(state))), "verify")


def test_orchestrator_validates_before_running():
    with pytest.raises(ParameterOutOfRange):
        VerifyOrchestrator(progress=False).run([{"case_id": "A4mOdd.fusion", "values": [4]}])


def test_empty_outcome_frame():
    assert list(outcome_frame([]).columns) == ["case_id", "parameter", "value", "result", "observed"]


@pytest.mark.parametrize("case_id", ["A4mEven.fixed", "A4mEven.fixed.plus", "A4mEven.even-t"])
def test_even_m_cases_accept_every_even_m(case_id):
    validate_values(get_case(case_id), [2, 4, 6])
    with pytest.raises(ParameterOutOfRange):
        validate_values(get_case(case_id), [3])


def test_a4m_even_fixed_at_m2_carries_reducible_note():
    outcome = run_case(get_case("A4mEven.fixed"), 2)
    assert outcome.passed, outcome.detail
    assert "reducible degree-one module" in outcome.detail


def test_case_degree_bound_falls_back_to_settings(monkeypatch):
    monkeypatch.delenv("HOPF_MAX_DEGREE", raising=False)
    A = standard_action(build_H2n2(2), "KP-a")
    assert case_degree_bound(A, [2, 4]) == 10
    assert case_degree_bound(A, None) == 18
    monkeypatch.setenv("HOPF_MAX_DEGREE", "9")
    assert case_degree_bound(A, None) == 9
    assert case_degree_bound(A, [2, 4]) == 10

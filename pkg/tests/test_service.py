"""HTTP layer tests: exact payloads, error shapes, status codes."""

import pytest
from fastapi.testclient import TestClient

from qsmash.service import create_app

pytestmark = pytest.mark.filterwarnings("ignore::DeprecationWarning")


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok", "version": "0.1.0"}


def test_normalize_default_algebra(client):
    resp = client.post("/normalize", json={"text": "Y*X"})
    assert resp.status_code == 200
    assert resp.json() == {
        "algebra": "A",
        "text": "q^-1 * X*Y",
        "terms": [
            {
                "i": 0,
                "a": 1,
                "b": 1,
                "c": 0,
                "numerator": [1],
                "denominator": [0, 1],
            }
        ],
    }


def test_normalize_in_quotient(client):
    resp = client.post("/normalize", json={"text": "E*Y", "algebra": "A_mod_phi"})
    assert resp.status_code == 200
    assert resp.json() == {
        "algebra": "A_mod_phi",
        "text": "q * Y*E",
        "terms": [
            {"exponents": {"Y": 1, "E": 1}, "numerator": [0, 1], "denominator": [1]}
        ],
    }


def test_normalize_parametric_quotient(client):
    resp = client.post("/normalize", json={"text": "Y*X", "algebra": "L(7)"})
    assert resp.status_code == 200
    assert resp.json() == {"algebra": "L(7)", "text": "0", "terms": []}


def test_normalize_parse_error(client):
    resp = client.post("/normalize", json={"text": "X +"})
    assert resp.status_code == 400
    assert resp.json() == {
        "message": "expected a symbol, a number, or '('",
        "column": 4,
    }


def test_normalize_unknown_algebra(client):
    resp = client.post("/normalize", json={"text": "X", "algebra": "B_mod"})
    assert resp.status_code == 400
    body = resp.json()
    assert body["column"] == 1
    assert body["message"].startswith("unknown algebra 'B_mod'")


def test_normalize_missing_field(client):
    resp = client.post("/normalize", json={})
    assert resp.status_code == 422


def test_spectrum_dot(client):
    resp = client.get("/spectrum/dot")
    assert resp.status_code == 200
    assert resp.text.splitlines()[0] == "digraph spectrum {"
    assert resp.text == client.get("/spectrum/dot").text


def test_spectrum_adjacency(client):
    resp = client.get("/spectrum/adjacency")
    assert resp.status_code == 200
    body = resp.json()
    assert body["nodes"] == [
        "zero",
        "X",
        "phi",
        "Y",
        "E",
        "YE",
        "P_family",
        "Q_family",
        "R_family",
    ]
    assert len(body["edges"]) == 11
    assert ["zero", "X"] in body["edges"]
    assert ["YE", "P_family"] in body["edges"]


def test_act_weight_module(client):
    resp = client.post(
        "/act", json={"module": "weight(2;3)", "word": "E", "start": "(0,0)"}
    )
    assert resp.status_code == 200
    assert resp.json() == {
        "module": "weight(2;3)",
        "start": "(0,0)",
        "vector": [
            {
                "label": "(-2, 0)",
                "coeff": "3*q/(q^2 - 1)",
                "numerator": [0, 3],
                "denominator": [-1, 0, 1],
            },
            {
                "label": "(-2, 1)",
                "coeff": "-q/(q^2 - 1)",
                "numerator": [0, -1],
                "denominator": [-1, 0, 1],
            },
        ],
    }


def test_act_line_module(client):
    resp = client.post(
        "/act", json={"module": "case-b(5)", "word": "E*K", "start": "0"}
    )
    assert resp.status_code == 200
    assert resp.json()["vector"] == [
        {"label": "1", "coeff": "5*q^-2", "numerator": [5], "denominator": [0, 0, 1]}
    ]


def test_act_label_mismatch(client):
    resp = client.post(
        "/act", json={"module": "case-b(5)", "word": "E", "start": "(0,0)"}
    )
    assert resp.status_code == 400
    assert resp.json() == {
        "message": "this module family uses integer labels",
        "column": 1,
    }


def test_center_quotient(client):
    resp = client.post("/center", json={"algebra": "A_mod_X", "degree": 3})
    assert resp.status_code == 200
    assert resp.json() == {
        "algebra": "A_mod_X",
        "degree": 3,
        "dimension": 2,
        "basis": ["1", "K^-1*Y^2*E"],
    }


def test_center_defaults(client):
    resp = client.post("/center", json={})
    assert resp.status_code == 200
    assert resp.json() == {
        "algebra": "A",
        "degree": 3,
        "dimension": 1,
        "basis": ["1"],
    }


def test_center_degree_bounds(client):
    resp = client.post("/center", json={"degree": 40})
    assert resp.status_code == 422


def test_aut_apply(client):
    resp = client.post("/aut/apply", json={"aut": "aut(1;1;1;1)", "text": "X"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["text"] == "K*X"
    assert body["terms"] == [
        {"i": 1, "a": 1, "b": 0, "c": 0, "numerator": [1], "denominator": [1]}
    ]


def test_aut_compose(client):
    resp = client.post(
        "/aut/compose", json={"first": "aut(2;1;1;0)", "second": "aut(1;1;1;1)"}
    )
    assert resp.status_code == 200
    assert resp.json() == {"literal": "aut(2;1;1;1)"}


def test_aut_inverse(client):
    resp = client.post("/aut/inverse", json={"aut": "aut(2;q;1;-1)"})
    assert resp.status_code == 200
    assert resp.json() == {"literal": "aut(1/2;q^-1;1;1)"}


def test_aut_bad_literal(client):
    resp = client.post("/aut/inverse", json={"aut": "aut(2;q;1)"})
    assert resp.status_code == 400
    assert "column" in resp.json()


def test_verify_identities(client):
    resp = client.post("/verify", json={"suite": "identities"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["suite"] == "identities"
    assert body["passed"] is True
    assert len(body["checks"]) == 9
    assert body["checks"][0] == {
        "name": "defining relations",
        "passed": True,
        "detail": "all six normalize to zero",
    }


def test_verify_unknown_suite(client):
    resp = client.post("/verify", json={"suite": "nope"})
    assert resp.status_code == 400
    body = resp.json()
    assert body["column"] is None
    assert body["message"].startswith("unknown suite 'nope'")


def test_gwa_check(client):
    resp = client.post("/gwa-check", json={"triples": 5, "pairs": 5})
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"] is True
    assert [row["name"] for row in body["checks"]] == [
        "product associativity",
        "structure coefficients",
        "embedding into the PBW algebra",
        "skew extension constant",
    ]

import pytest
from fastapi.testclient import TestClient

from relmilnor import __version__
from relmilnor.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def problem(**extra):
    base = {"variables": ["x", "y"], "weights": [1, 1], "phi": "x*y", "f": "x^3 + y^3"}
    base.update(extra)
    return base


def test_health(client):
    res = client.get("/health")
    assert res.status_code == 200
    assert res.json() == {"status": "ok", "version": __version__}


def test_check_qh(client):
    res = client.post("/check-qh", json={"problem": problem()})
    assert res.status_code == 200
    body = res.json()
    assert body["command"] == "check-qh"
    assert body["quasihomogeneous"] is True
    assert body["degree"] == "3"
    assert body["euler_identity_ok"] is True


def test_check_qh_negative(client):
    res = client.post("/check-qh", json={"problem": problem(f="x^3 + y^2")})
    assert res.status_code == 200
    body = res.json()
    assert body["quasihomogeneous"] is False
    assert body["degree"] is None


def test_infer_weights(client):
    payload = {
        "problem": {
            "variables": ["x", "y", "z"],
            "weights": [1, 1, 1],
            "f": "x^2*y + z^2",
        }
    }
    res = client.post("/infer-weights", json=payload)
    assert res.status_code == 200
    body = res.json()
    assert body["dimension"] == 2
    assert body["canonical_weights"] == [1, 2, 2]
    assert body["canonical_degree"] == "4"


def test_theta(client):
    res = client.post("/theta", json={"problem": problem(), "degree": 0})
    assert res.status_code == 200
    body = res.json()
    assert body["dimension"] == 2
    assert {tuple(f["components"]) for f in body["fields"]} == {
        ("x", "0"),
        ("0", "y"),
    }


def test_lie0(client):
    payload = {
        "problem": {
            "variables": ["x", "y", "z"],
            "weights": [2, 2, 3],
            "phi": "x^2*y + z^2",
        }
    }
    res = client.post("/lie0", json=payload)
    assert res.status_code == 200
    body = res.json()
    assert body["count"] == 5
    assert len(body["fields"]) == 5


def test_fingerprint(client):
    res = client.post("/fingerprint", json={"problem": problem(), "max_degree": 5})
    assert res.status_code == 200
    fp = res.json()["fingerprint"]
    assert fp["degrees"] == ["0", "1", "2", "3", "4", "5"]
    assert fp["dims"] == [1, 2, 3, 2, 1, 0]


def test_fingerprint_default_truncation(client):
    res = client.post("/fingerprint", json={"problem": problem()})
    assert res.status_code == 200
    assert res.json()["fingerprint"]["truncation"] == "8"  # 2*3 + 2


def test_ideal_equal(client):
    res = client.post(
        "/ideal-equal", json={"problem": problem(g="2*x^3 + 5*y^3")}
    )
    assert res.status_code == 200
    assert res.json()["equal"] is True

    res = client.post(
        "/ideal-equal", json={"problem": problem(g="x^3 + y^3 + x^2*y")}
    )
    assert res.status_code == 200
    body = res.json()
    assert body["equal"] is False
    assert body["witness_degree"] == "3"


def test_pencil(client):
    res = client.post("/pencil", json={"problem": problem(g="2*x^3 + 5*y^3")})
    assert res.status_code == 200
    body = res.json()
    assert body["verdict"] == "EQUIVALENT"
    assert body["s"] == 2
    assert body["rational_roots"] == ["-1", "-1/4"]
    assert body["exceptional_poly"] == ["1/4", "5/4", "1"]
    assert body["endpoints_ok"] and body["tangent_inclusion"] and body["hypothesis_ok"]


def test_decide_equivalent(client):
    res = client.post("/decide", json={"problem": problem(g="2*x^3 + 5*y^3")})
    assert res.status_code == 200
    body = res.json()
    assert body["status"] == "EQUIVALENT"
    assert body["reason"] == "pencil_certificate"
    assert body["pencil"]["verdict"] == "EQUIVALENT"
    assert body["seed"] is None


def test_decide_with_substitution(client):
    res = client.post(
        "/decide",
        json={"problem": problem(g="8*x^3 + y^3", subst=["1/2*x", "y"])},
    )
    assert res.status_code == 200
    body = res.json()
    assert body["status"] == "EQUIVALENT"
    assert body["substitution"] == ["1/2*x", "y"]
    assert body["pencil"] is not None


def test_decide_not_equivalent(client):
    res = client.post("/decide", json={"problem": problem(g="x^3 + x^2*y")})
    assert res.status_code == 200
    body = res.json()
    assert body["status"] == "NOT_EQUIVALENT"
    assert body["reason"] == "fingerprint_mismatch"
    assert body["witness_degree"] == "4"


def test_decide_unknown(client):
    res = client.post("/decide", json={"problem": problem(g="x^3 + y^3 + x^2*y")})
    assert res.status_code == 200
    assert res.json()["status"] == "UNKNOWN"


def test_transport(client):
    res = client.post(
        "/transport",
        json={"problem": problem(g="8*x^3 + y^3"), "subst": ["1/2*x", "y"]},
    )
    assert res.status_code == 200
    body = res.json()
    assert body["verified"] is True
    assert body["substitution"] == ["1/2*x", "y"]


def test_transport_singular_is_422(client):
    res = client.post(
        "/transport",
        json={"problem": problem(g="8*x^3 + y^3"), "subst": ["x + y", "x + y"]},
    )
    assert res.status_code == 422


def test_forward(client):
    res = client.post(
        "/forward", json={"problem": problem(), "subst": ["2*x", "3*y"]}
    )
    assert res.status_code == 200
    assert res.json()["invariant_holds"] is True


def test_forward_non_preserving_is_422(client):
    res = client.post(
        "/forward", json={"problem": problem(), "subst": ["x + y", "y"]}
    )
    assert res.status_code == 422
    assert "preserve" in res.json()["detail"]


def test_crosscheck(client):
    res = client.post("/crosscheck", json={"instances": 3, "seed": 5, "max_degree": 5})
    assert res.status_code == 200
    body = res.json()
    assert body["all_match"] is True
    assert len(body["results"]) == 3
    assert all(r["ok"] for r in body["results"])


def test_saito_membership(client):
    res = client.post("/saito-membership", json={"problem": problem()})
    assert res.status_code == 200
    assert res.json()["member"] is True  # quasihomogeneous, so f is in J_f

    res = client.post(
        "/saito-membership",
        json={"problem": problem(f="x^5 + y^5 + x^3*y^3")},
    )
    assert res.status_code == 200
    body = res.json()
    assert body["member"] is False
    assert body["remainder"] != "0"


def test_bad_polynomial_is_422(client):
    res = client.post("/check-qh", json={"problem": problem(f="x +* y")})
    assert res.status_code == 422
    assert "f" in res.json()["detail"]


def test_missing_field_is_422(client):
    res = client.post("/fingerprint", json={"problem": {"variables": ["x"], "weights": [1]}})
    assert res.status_code == 422


def test_weights_length_mismatch_is_422(client):
    res = client.post(
        "/check-qh",
        json={"problem": {"variables": ["x", "y"], "weights": [1], "f": "x"}},
    )
    assert res.status_code == 422


def test_nonpositive_weight_is_422(client):
    res = client.post(
        "/check-qh",
        json={"problem": {"variables": ["x"], "weights": [0], "f": "x"}},
    )
    assert res.status_code == 422


def test_unknown_route_is_404(client):
    assert client.post("/no-such-command", json={}).status_code == 404

import pytest
from fastapi.testclient import TestClient

from rkit.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health_and_cases(client):
    assert client.get("/health").json()["status"] == "ok"
    cases = client.get("/cases").json()
    assert {c["id"] for c in cases} >= {"L1", "L4", "T4", "T5", "T6_REPORT"}


def test_sieve_and_point_queries(client):
    data = client.post("/sieve", json={"limit": 100_000}).json()
    assert data["prime_count"] == 9592
    assert client.get("/pi", params={"x": 11.5}).json()["value"] == 5
    assert client.get("/nth-prime", params={"n": 25}).json()["value"] == 97
    assert client.get("/window", params={"level": 0, "x": 10}).json()["value"] == 1
    assert client.get("/window", params={"level": 1, "x": 41}).json()["value"] == 2


def test_sequence_endpoint(client):
    data = client.post("/sequence", json={"level": 1, "limit": 10_000, "max_terms": 6}).json()
    assert data["elements"] == [2, 11, 17, 29, 41, 47]
    assert not data["truncated"] and not data["heuristic"]
    data = client.post("/sequence", json={"level": 2, "limit": 10_000, "max_terms": 10}).json()
    assert data["elements"] == [11, 41, 59, 97, 149, 151, 227, 229, 233, 239]
    data = client.post("/sequence", json={"level": 1, "limit": 1000, "max_terms": 10_000}).json()
    assert data["truncated"]
    data = client.post("/sequence", json={"level": 3, "limit": 50_000, "max_terms": 3}).json()
    assert data["heuristic"] and data["elements"][0] == 41


def test_c_ramanujan_and_interval(client):
    data = client.post(
        "/c-ramanujan", json={"c_num": 1, "c_den": 2, "n": 4, "limit": 10_000}
    ).json()
    assert data["value"] == 29
    data = client.post(
        "/c-ramanujan", json={"c_num": 3, "c_den": 4, "n": 1, "limit": 10_000}
    ).json()
    assert data["value"] == 11
    assert (
        client.get("/interval-count", params={"c_num": 1, "c_den": 2, "x": 10}).json()["value"]
        == 1
    )
    # uncertifiable request is a usage error, not a silent answer
    resp = client.post("/c-ramanujan", json={"c_num": 9, "c_den": 10, "n": 5, "limit": 100})
    assert resp.status_code == 422


def test_additive_endpoints(client):
    data = client.post("/represent", json={"n": 123}).json()
    assert data["found"] and data["parts"] == [71, 41, 11]
    data = client.post("/represent", json={"n": 122}).json()
    assert not data["found"]
    data = client.post("/unrep", json={"scan_limit": 500}).json()
    assert data["largest_unrepresentable"] == 122
    data = client.post("/pair", json={"k": 7}).json()
    assert not data["feasible"]
    data = client.post("/pair", json={"k": 17}).json()
    assert data["feasible"] and len(data["pairs"]) == 17
    data = client.post("/pair", json={"k": 17, "oracle": True}).json()
    assert data["feasible"]
    assert client.post("/pair", json={"k": 30, "oracle": True}).status_code == 422


def test_verify_endpoint(client):
    data = client.post("/verify", json={"case": "T5", "n_max": 100}).json()
    assert data["case"] == "T5" and data["counterexamples"] == []
    assert "elapsed_s" in data
    data = client.post("/verify", json={"case": "T4", "x_max": 1000}).json()
    assert len(data["counterexamples"]) > 0  # the real small-x failures
    assert client.post("/verify", json={"case": "XX"}).status_code == 422


def test_crosscheck_endpoint(client):
    entries = [[1, 11], [2, 41], [3, 59], [4, 97], [5, 149]]
    data = client.post("/crosscheck", json={"level": 2, "entries": entries}).json()
    assert data["checked"] == 5 and data["mismatches"] == []
    entries[2] = [3, 60]
    data = client.post("/crosscheck", json={"level": 2, "entries": entries}).json()
    assert data["mismatches"][0]["n"] == 3


def test_ratio_trend_endpoint(client):
    data = client.post("/ratio-trend", json={"limit": 500_000}).json()
    assert data["overall_decreasing"] is True
    assert len(data["blocks"]) >= 5


def test_validation_errors(client):
    assert client.post("/sieve", json={"limit": 1}).status_code == 422
    assert client.post("/sequence", json={"level": 0, "limit": 100}).status_code == 422
    assert client.get("/pi", params={"x": -3}).status_code == 422

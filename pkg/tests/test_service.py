import numpy as np
import pytest
from fastapi.testclient import TestClient

import gliderange as g
from gliderange.service import create_app


@pytest.fixture(scope="module")
def client(warm_kernel):
    app = create_app()
    with TestClient(app, raise_server_exceptions=False) as c:
        yield c


def test_presets_listed(client):
    r = client.get("/api/presets")
    assert r.status_code == 200
    names = {p["name"] for p in r.json()}
    assert "grrp-flat" in names and "mrap-flat" in names
    assert all(p["description"] for p in r.json())


def test_solve_preset_round_trip(client):
    r = client.post("/api/solve", json={"preset": "mrap-flat"})
    assert r.status_code == 200
    doc = r.json()
    assert doc["schema_version"] == 1
    assert "result_id" in doc
    direct = g.solve_mrap(g.build_preset("mrap-flat"))
    served = np.array([np.inf if v is None else v for v in doc["field"]])
    assert np.array_equal(served, direct.V)


def test_solve_inline_scenario(client):
    n = 21
    r = client.post("/api/solve", json={
        "grid": {"n_cols": n, "n_rows": n, "spacing": 1.0},
        "elevation": [0.0] * (n * n),
        "aircraft": {"mode": "constant", "g0": 1.0},
        "problem": {"kind": "grr", "start_xy": [10.0, 10.0], "z0": 100.0},
    })
    assert r.status_code == 200
    assert len(r.json()["field"]) == n * n


def test_invalid_json_body(client):
    r = client.post("/api/solve", content=b"{not json",
                    headers={"content-type": "application/json"})
    assert r.status_code == 400
    assert r.json()["code"] == "invalid-json"


def test_malformed_wind_names_field(client):
    r = client.post("/api/solve", json={
        "preset": "grrp-flat",
        "wind": {"variant": "uniform", "vector": "oops"}})
    assert r.status_code == 400
    body = r.json()
    assert body["code"] == "invalid-scenario"
    assert body["field"].startswith("wind")


def test_unknown_preset_is_invalid_scenario(client):
    r = client.post("/api/solve", json={"preset": "nope"})
    assert r.status_code == 400
    assert r.json()["code"] == "invalid-scenario"


def test_oversize_grid_rejected(client):
    n = 1100
    r = client.post("/api/solve", json={
        "grid": {"n_cols": n, "n_rows": n, "spacing": 1.0},
        "elevation": [0.0] * (n * n),
        "aircraft": {"mode": "constant", "g0": 10.0},
        "problem": {"kind": "grr", "start_xy": [550.0, 550.0], "z0": 100.0},
    })
    assert r.status_code == 422
    assert r.json()["code"] == "unsupported-configuration"


def test_trace_by_result_id(client):
    rid = client.post("/api/solve",
                      json={"preset": "mrap-flat"}).json()["result_id"]
    r = client.post("/api/trace", json={"result_id": rid,
                                        "target": [40.0, 65.0]})
    assert r.status_code == 200
    traj = r.json()["trajectory"]
    assert traj["termination"] == "reached-origin"
    assert len(traj["vertices"]) >= 2


def test_trace_unknown_result_id(client):
    r = client.post("/api/trace", json={"result_id": "nope",
                                        "target": [1.0, 1.0]})
    assert r.status_code == 422
    assert r.json()["code"] == "unknown-result"


def test_trace_unreachable_target(client):
    rid = client.post("/api/solve",
                      json={"preset": "mrap-flat"}).json()["result_id"]
    r = client.post("/api/trace", json={"result_id": rid,
                                        "target": [9999.0, 9999.0]})
    assert r.status_code == 422
    assert r.json()["code"] == "unreachable-target"


def test_trace_requires_target(client):
    r = client.post("/api/trace", json={"result_id": "x"})
    assert r.status_code == 400
    assert r.json()["field"] == "target"


def test_trace_inline_scenario(client):
    n = 21
    r = client.post("/api/trace", json={
        "scenario": {
            "grid": {"n_cols": n, "n_rows": n, "spacing": 1.0},
            "elevation": [0.0] * (n * n),
            "aircraft": {"mode": "constant", "g0": 1.0},
            "problem": {"kind": "grr", "start_xy": [10.0, 10.0], "z0": 100.0},
        },
        "target": [15.0, 15.0]})
    assert r.status_code == 200
    assert r.json()["trajectory"]["kind"] == "grrp-optimal"

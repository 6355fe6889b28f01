"""HTTP service tests through the in-process test client."""

import math
import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from bessel_radii.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_healthz(client):
    resp = client.get("/healthz")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


class TestRadiusEndpoint:
    def test_closed_form_value(self, client):
        resp = client.post(
            "/radius",
            json={"family": "g", "nu": 0.5, "alpha": 0.0, "beta": 0.0},
        )
        assert resp.status_code == 200
        body = resp.json()
        assert set(body) == {
            "family", "nu", "alpha", "beta", "radius", "cap", "residual", "iterations",
        }
        assert body["radius"] == pytest.approx(math.pi / 2, abs=1e-9)
        assert body["residual"] < 1e-9

    def test_deterministic(self, client):
        payload = {"family": "f", "nu": 1.0, "alpha": 0.5, "beta": 0.45}
        a = client.post("/radius", json=payload).content
        b = client.post("/radius", json=payload).content
        assert a == b

    def test_domain_error_is_422(self, client):
        resp = client.post(
            "/radius", json={"family": "f", "nu": -2.0, "alpha": 0.5, "beta": 0.45}
        )
        assert resp.status_code == 422
        assert "detail" in resp.json()

    def test_schema_error_is_422(self, client):
        resp = client.post(
            "/radius", json={"family": "f", "nu": 1.0, "alpha": 0.5, "beta": 1.2}
        )
        assert resp.status_code == 422

    def test_family_f_tiny_nu_rejected(self, client):
        resp = client.post(
            "/radius", json={"family": "f", "nu": 1e-4, "alpha": 0.5, "beta": 0.45}
        )
        assert resp.status_code == 422


class TestCsvEndpoints:
    def test_figure(self, client):
        resp = client.post("/figure", json={"figure_id": 1, "r_points": 20})
        assert resp.status_code == 200
        assert resp.headers["content-type"].startswith("text/csv")
        assert resp.text.startswith("# figure=1,family=f,")
        assert resp.content == client.post(
            "/figure", json={"figure_id": 1, "r_points": 20}
        ).content

    def test_zeros(self, client):
        resp = client.post(
            "/zeros", json={"kind": "j", "nu": 0.5, "count": 2, "zero_tol": 1e-12}
        )
        assert resp.status_code == 200
        rows = [ln for ln in resp.text.strip().split("\n") if not ln.startswith("#")]
        assert rows[0] == "n,zero"
        assert float(rows[1].split(",")[1]) == pytest.approx(math.pi, abs=1e-10)

    def test_sweep(self, client):
        resp = client.post(
            "/sweep",
            json={"family": "h", "nu": -0.5, "beta": 0.29, "alphas": [0.0, 1.0]},
        )
        assert resp.status_code == 200
        rows = [ln for ln in resp.text.strip().split("\n") if not ln.startswith("#")]
        assert rows[0] == "alpha,radius,cap,residual,iterations"
        assert len(rows) == 3

    def test_bad_figure_id(self, client):
        resp = client.post("/figure", json={"figure_id": 9})
        assert resp.status_code == 422


class TestVerifyEndpoint:
    def test_small_grid_passes(self, client):
        resp = client.post(
            "/verify",
            json={
                "entries": [
                    {"family": "g", "nu": 0.5, "beta": 0.37, "alphas": [0.0, 1.0]}
                ],
                "interlacing_nus": [0.5],
                "count": 3,
                "samples": 64,
                "lemma_trials": 200,
                "dual_r_points": 5,
            },
        )
        assert resp.status_code == 200
        report = resp.json()
        assert report["passed"] is True
        names = [c["name"] for c in report["checks"]]
        assert any(name.startswith("dual-method") for name in names)
        assert any(name.startswith("lemma gap") for name in names)

    def test_invalid_grid_rejected(self, client):
        resp = client.post(
            "/verify",
            json={
                "entries": [
                    {"family": "f", "nu": 1e-4, "beta": 0.45, "alphas": [0.5]}
                ]
            },
        )
        assert resp.status_code == 422

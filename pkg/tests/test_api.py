import inspect
import logging

import pytest
from fastapi.testclient import TestClient

from ffh import __version__
from ffh.main import HealthCheckFilter, app
from ffh.services.transform_service import TransformService


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_root(client):
    assert client.get("/").json() == {"message": "Fueter-Funk-Hecke API", "version": __version__}


def test_service_health_after_startup(client):
    response = client.get("/api/v1/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "healthy"
    assert body["stats"]["cached_rules"] >= 3


@pytest.mark.parametrize("path", ["/api/v1/health", "/health"])
def test_health_is_unhealthy_before_startup(monkeypatch, path):
    monkeypatch.setattr(TransformService, "_initialized", False)
    response = TestClient(app).get(path)
    assert response.status_code == 503


def test_root_health_matches_service_health(client):
    assert client.get("/health").json() == client.get("/api/v1/health").json()


def test_health_filter_drops_health_requests():
    record = logging.LogRecord("uvicorn.access", logging.INFO, "", 0, '"GET /health HTTP/1.1" 200', None, None)
    assert not HealthCheckFilter().filter(record)


def test_exact_transform(client):
    response = client.post("/api/v1/transform", json={"h": "z^4"})
    assert response.status_code == 200
    body = response.json()
    assert body["classification"] == "Homogeneous(2)"
    assert body["normalization"] == {"rat": "16", "pi_pow": 0}
    assert body["latex"] is None


def test_transform_with_latex(client):
    response = client.post("/api/v1/transform", params={"latex": "true"}, json={"h": "i*z", "p": 3, "q": 3})
    body = response.json()
    assert body["classification"] == "NonPolynomial"
    assert body["normalization_text"] == "-4"
    assert body["latex"]


def test_numeric_transform(client):
    response = client.post("/api/v1/transform", json={"h": "z^4", "numeric": True, "r": 2.0, "rho": 0.5})
    body = response.json()
    assert response.status_code == 200
    assert body["M"] == pytest.approx(-60.0, rel=1e-7)
    assert body["flagged"] is False


@pytest.mark.parametrize(
    "payload",
    [
        {"h": "z^-1"},
        {"h": "z^4", "q": 4},
        {"h": "1/(1+z^2)"},
        {"h": "z^4", "numeric": True, "r": 1.0},
    ],
)
def test_bad_requests(client, payload):
    assert client.post("/api/v1/transform", json=payload).status_code == 400


def test_rejected_monogenic(client):
    response = client.post("/api/v1/transform", json={"h": "z^4", "k": 1, "Pk": "x1"})
    assert response.status_code == 422
    assert response.json()["detail"]["reason"] == "not-monogenic"


def test_verify(client):
    response = client.post("/api/v1/verify", json={"h": "i*z^4", "p": 4, "k": 1})
    body = response.json()
    assert body["passed"] is True
    assert [c["name"] for c in body["checks"]] == ["vekua", "dirac"]


def test_classify(client):
    body = client.get("/api/v1/classify", params={"n": 7, "k": 1}).json()
    assert (body["classification"], body["degree"]) == ("Homogeneous(4)", 4)


def test_classify_needs_odd_q(client):
    assert client.get("/api/v1/classify", params={"n": 4, "q": 4}).status_code == 400


def test_moments(client):
    rows = client.get("/api/v1/moments", params={"n_max": 2, "k_max": 1, "p": 4}).json()
    assert len(rows) == 6
    assert {"n": 2, "k": 0, "p": 4, "rat": "1/8", "pi_pow": 1} in rows


def test_worked_examples(client):
    body = client.get("/api/v1/paper-examples").json()
    assert body["passed"] is True
    assert len(body["examples"]) == 5


@pytest.mark.parametrize("path", ["/api/v1/transform", "/api/v1/verify", "/api/v1/classify", "/api/v1/moments", "/api/v1/paper-examples"])
def test_compute_endpoints_run_in_the_threadpool(path):
    endpoint = next(route.endpoint for route in app.routes if getattr(route, "path", None) == path)
    assert not inspect.iscoroutinefunction(endpoint)


def test_worked_examples_use_the_configured_quadrature(monkeypatch):
    seen = {}

    def fake_worked_examples(quad_order, tol):
        seen.update(quad_order=quad_order, tol=tol)
        return []

    monkeypatch.setattr("ffh.services.transform_service.worked_examples", fake_worked_examples)
    monkeypatch.setenv("FFH_QUAD_ORDER", "96")
    monkeypatch.setenv("FFH_TOL", "1e-5")
    TransformService.worked_examples()
    assert seen == {"quad_order": 96, "tol": 1e-5}

    monkeypatch.delenv("FFH_QUAD_ORDER")
    TransformService.worked_examples(tol=1e-4)
    assert seen == {"quad_order": 512, "tol": 1e-4}

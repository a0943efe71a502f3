"""HTTP endpoints."""
import pytest
from fastapi.testclient import TestClient

from main import app
from models.database import create_db_engine, get_db, get_session_maker, init_db


@pytest.fixture
def client(monkeypatch):
    monkeypatch.setenv("EDGERING_THREADS", "1")
    engine = init_db(create_db_engine("sqlite://"))
    SessionLocal = get_session_maker(engine)

    def override_get_db():
        db = SessionLocal()
        try:
            yield db
        finally:
            db.close()

    app.dependency_overrides[get_db] = override_get_db
    yield TestClient(app)
    app.dependency_overrides.clear()
    engine.dispose()


def test_root_and_health(client):
    assert client.get("/health").json() == {"status": "healthy"}
    root = client.get("/").json()
    assert root["service"] == "edgering"
    assert root["schema_version"] == "1"


def test_analyze_literal(client):
    response = client.post("/analyze", json={"graph": "4;1-2,2-3,3-4,1-4", "qmax": 3, "jmax": 4})
    assert response.status_code == 200
    body = response.json()
    assert body["polytope"]["delta"] == [1, 1, 0]
    assert body["ideal"]["betti"]["mu"] == {"2": 1, "3": 0}


def test_analyze_edges(client):
    response = client.post("/analyze", json={"n": 3, "edges": [[1, 2], [2, 3], [1, 3]], "qmax": 3, "jmax": 4})
    assert response.status_code == 200
    assert response.json()["polytope"]["degree"] == 0


def test_analyze_errors(client):
    bad = client.post("/analyze", json={"graph": "3;1-2,2-x"})
    assert bad.status_code == 422
    assert "line" in bad.json()

    disconnected = client.post("/analyze", json={"graph": "4;1-2,3-4", "qmax": 3, "jmax": 4})
    assert disconnected.status_code == 422
    assert disconnected.json()["components"] == [[1, 2], [3, 4]]

    loop = client.post("/analyze", json={"n": 3, "edges": [[1, 1]]})
    assert loop.status_code == 422

    assert client.post("/analyze", json={"qmax": 3}).status_code == 422


def test_verify_and_runs(client):
    response = client.post("/verify/L42", json={"max_n": 4})
    assert response.status_code == 200
    assert response.json()["instances_checked"] == 9

    runs = client.get("/runs").json()
    assert len(runs) == 1
    assert runs[0]["lemma_id"] == "L42"
    assert runs[0]["counterexample_count"] == 0

    run_id = runs[0]["id"]
    assert client.get(f"/runs/{run_id}/counterexamples").json() == []
    assert client.get("/runs", params={"lemma_id": "L41"}).json() == []


def test_verify_guard(client):
    response = client.post("/verify/L42", json={"max_n": 8})
    assert response.status_code == 422
    assert response.json()["limit"] == 7


def test_missing_run(client):
    assert client.get("/runs/12345/counterexamples").status_code == 404


def test_unknown_lemma(client):
    assert client.post("/verify/L99", json={}).status_code == 422

import pytest
from fastapi.testclient import TestClient

from conftest import EXAMPLE_ROWS
from tropconv.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_pseudovertices(client):
    resp = client.post("/pseudovertices", json={"points": EXAMPLE_ROWS})
    assert resp.status_code == 200
    assert len(resp.json()["pseudo_vertices"]) == 10


def test_vertices_zero_based(client):
    resp = client.post(
        "/vertices",
        json={"points": EXAMPLE_ROWS, "options": {"zero_based": True}},
    )
    assert resp.status_code == 200
    assert resp.json()["indices"] == [0, 1, 2, 3]


def test_type(client):
    resp = client.post(
        "/type", json={"points": EXAMPLE_ROWS, "point": [0, 3, 2]}
    )
    assert resp.status_code == 200
    assert resp.json()["type"] == [[1, 2], [1, 3], [2, 4]]


def test_contains(client):
    resp = client.post(
        "/contains", json={"points": EXAMPLE_ROWS, "point": [0, 100, 100]}
    )
    assert resp.status_code == 200
    assert resp.json() == {"contains": False}


def test_tdet_fractions(client):
    resp = client.post(
        "/tdet",
        json={"points": [["1/2", 9, 9], [9, "1/3", 9], [9, 9, "1/6"]]},
    )
    assert resp.status_code == 200
    assert resp.json()["value"] == 1


def test_precondition_is_422(client):
    resp = client.post("/tdet", json={"points": EXAMPLE_ROWS})
    assert resp.status_code == 422
    assert resp.json()["error"]["kind"] == "precondition"


def test_parse_error_is_400(client):
    resp = client.post(
        "/pseudovertices", json={"points": [["oops", 1, 2]]}
    )
    assert resp.status_code == 400
    assert resp.json()["error"]["kind"] == "parse"


def test_tree_with_options(client):
    resp = client.post(
        "/tree",
        json={
            "points": EXAMPLE_ROWS,
            "index": 1,
            "options": {"offset": 3, "scale": 6},
        },
    )
    assert resp.status_code == 200
    body = resp.json()
    assert len(body["leaves"]) == 6


def test_arrangement(client):
    resp = client.post("/arrangement", json={"points": EXAMPLE_ROWS})
    assert resp.status_code == 200
    body = resp.json()
    assert body["compatible"] is True
    assert len(body["trees"]) == 7


def test_svg(client):
    resp = client.post("/svg", json={"points": EXAMPLE_ROWS})
    assert resp.status_code == 200
    assert resp.headers["content-type"].startswith("image/svg+xml")
    assert resp.text.lstrip().startswith("<svg")


def test_matches_cli_output(client, tmp_path, capsys):
    """The HTTP layer and the CLI return identical payloads."""
    import json

    from tropconv.cli import main

    path = tmp_path / "p.json"
    path.write_text(json.dumps(EXAMPLE_ROWS))
    assert main(["bounded-complex", str(path), "--no-timing"]) == 0
    cli_doc = json.loads(capsys.readouterr().out)["result"]
    http_doc = client.post(
        "/bounded-complex", json={"points": EXAMPLE_ROWS}
    ).json()
    assert cli_doc == http_doc

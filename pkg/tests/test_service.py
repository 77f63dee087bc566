import json
import re
import subprocess
import sys
import time
import urllib.request

import pytest
from fastapi.testclient import TestClient

from pcrank import bounds_report
from pcrank.service import create_app

MX_JUDGMENTS = [(0, 1, 2), (0, 2, 2), (1, 2, 2)]
MC_JUDGMENTS = [(0, 1, 2), (0, 2, 4), (1, 2, 2)]


@pytest.fixture
def client():
    return TestClient(create_app())


def make_session(client, n=3, labels=None):
    body = {"n": n}
    if labels:
        body["labels"] = labels
    response = client.post("/api/sessions", json=body)
    assert response.status_code == 201
    return response.json()


def put_all(client, sid, judgments):
    for i, j, value in judgments:
        response = client.put(f"/api/sessions/{sid}/judgments/{i}/{j}", json={"value": value})
        assert response.status_code == 200
    return response.json()


class TestSessions:
    def test_health(self, client):
        assert client.get("/api/health").json() == {"status": "ok"}

    def test_create_starts_neutral(self, client):
        session = make_session(client, n=3)
        analysis = session["analysis"]
        assert analysis["koczkodaj"] == 0.0
        assert analysis["ranking"]["values"] == pytest.approx([1 / 3] * 3, abs=1e-12)
        assert session["labels"] == ["C1", "C2", "C3"]

    def test_create_with_labels(self, client):
        session = make_session(client, n=3, labels=["price", "quality", "service"])
        assert session["labels"] == ["price", "quality", "service"]

    def test_n_out_of_range(self, client):
        for n in (1, 26):
            response = client.post("/api/sessions", json={"n": n})
            assert response.status_code == 400
            assert response.json()["code"] == "n_out_of_range"

    def test_unknown_session_is_404(self, client):
        response = client.get("/api/sessions/missing")
        assert response.status_code == 404
        assert response.json() == {
            "code": "unknown_session",
            "message": "no session with id missing",
        }


class TestJudgments:
    def test_mx_scenario(self, client):
        sid = make_session(client)["id"]
        analysis = put_all(client, sid, MX_JUDGMENTS)
        assert analysis["koczkodaj"] == 0.5
        assert analysis["discrepancy"]["global"] == pytest.approx(0.25992, abs=1e-5)

    def test_mc_scenario(self, client):
        sid = make_session(client)["id"]
        analysis = put_all(client, sid, MC_JUDGMENTS)
        assert analysis["koczkodaj"] == 0.0
        assert analysis["discrepancy"]["global"] <= 1e-9

    def test_value_as_fraction_string(self, client):
        sid = make_session(client)["id"]
        response = client.put(f"/api/sessions/{sid}/judgments/0/1", json={"value": "5/2"})
        assert response.status_code == 200
        assert response.json()["matrix"]["matrix"][0][1] == 2.5

    def test_negative_value_rejected(self, client):
        sid = make_session(client)["id"]
        response = client.put(f"/api/sessions/{sid}/judgments/0/1", json={"value": -1})
        assert response.status_code == 400
        assert response.json()["code"] == "invalid_value"

    def test_lower_triangle_rejected(self, client):
        sid = make_session(client)["id"]
        response = client.put(f"/api/sessions/{sid}/judgments/1/0", json={"value": 2})
        assert response.status_code == 400
        assert response.json()["code"] == "invalid_pair"

    def test_reads_are_idempotent(self, client):
        sid = make_session(client)["id"]
        put_all(client, sid, MX_JUDGMENTS)
        first = client.get(f"/api/sessions/{sid}/analysis").json()
        second = client.get(f"/api/sessions/{sid}/analysis").json()
        assert first == second

    def test_history_records_judgments(self, client):
        sid = make_session(client)["id"]
        put_all(client, sid, MX_JUDGMENTS)
        history = client.get(f"/api/sessions/{sid}").json()["history"]
        assert [h["type"] for h in history] == ["judgment"] * 3
        assert history[0]["newValue"] == 2.0


class TestSuggestion:
    def test_full_projection(self, client):
        sid = make_session(client)["id"]
        put_all(client, sid, MX_JUDGMENTS)
        response = client.get(f"/api/sessions/{sid}/suggestion", params={"theta": 1.0})
        suggestion = response.json()
        assert (suggestion["i"], suggestion["j"]) == (0, 2)
        assert suggestion["newValue"] == 4.0
        assert suggestion["predictedK"] == 0.0
        # Suggesting does not mutate the session.
        assert client.get(f"/api/sessions/{sid}/analysis").json()["koczkodaj"] == 0.5

    def test_partial_blend_prediction(self, client):
        sid = make_session(client)["id"]
        put_all(client, sid, MX_JUDGMENTS)
        response = client.get(f"/api/sessions/{sid}/suggestion", params={"theta": 2 / 3})
        assert response.json()["predictedK"] == pytest.approx(0.20630, abs=1e-5)

    def test_already_consistent(self, client):
        sid = make_session(client)["id"]
        response = client.get(f"/api/sessions/{sid}/suggestion")
        assert response.status_code == 409
        assert response.json()["code"] == "already_consistent"

    def test_apply(self, client):
        sid = make_session(client)["id"]
        put_all(client, sid, MX_JUDGMENTS)
        response = client.post(
            f"/api/sessions/{sid}/suggestion/apply", json={"theta": 1.0}
        )
        assert response.status_code == 200
        assert response.json()["koczkodaj"] == 0.0
        history = client.get(f"/api/sessions/{sid}").json()["history"]
        assert history[-1]["type"] == "suggestion"
        assert history[-1]["newValue"] == 4.0


class TestSelfConsistency:
    def test_bounds_reproducible_from_response(self, client):
        sid = make_session(client, n=4)["id"]
        client.put(f"/api/sessions/{sid}/judgments/0/1", json={"value": 3})
        client.put(f"/api/sessions/{sid}/judgments/1/2", json={"value": 5})
        analysis = client.get(f"/api/sessions/{sid}/analysis").json()
        recomputed = bounds_report(
            analysis["koczkodaj"], analysis["discrepancy"]["global"], analysis["n"]
        )
        bounds = analysis["bounds"]
        assert bounds["discrepancyBound"] == recomputed.discrepancy_bound
        assert bounds["saatyLower"] == recomputed.saaty_lower
        assert bounds["saatyUpper"] == recomputed.saaty_upper
        assert bounds["lambdaLower"] == recomputed.lambda_lower
        assert bounds["lambdaUpper"] == recomputed.lambda_upper
        assert bounds["kappa"] == recomputed.kappa
        assert bounds["popThreshold"] == recomputed.pop_threshold
        assert bounds["poipThreshold"] == recomputed.poip_threshold


class TestServeCommand:
    def test_port_zero_prints_bound_port_and_serves(self):
        proc = subprocess.Popen(
            [sys.executable, "-m", "pcrank.cli", "serve", "--port", "0"],
            stdout=subprocess.PIPE,
            stderr=subprocess.STDOUT,
            text=True,
        )
        try:
            line = proc.stdout.readline()
            match = re.search(r"http://([\d.]+):(\d+)", line)
            assert match, f"no address announced: {line!r}"
            port = int(match.group(2))
            assert port > 0
            deadline = time.time() + 10
            payload = None
            while time.time() < deadline:
                try:
                    with urllib.request.urlopen(
                        f"http://127.0.0.1:{port}/api/health", timeout=1
                    ) as response:
                        payload = json.loads(response.read())
                    break
                except OSError:
                    time.sleep(0.1)
            assert payload == {"status": "ok"}
        finally:
            proc.terminate()
            proc.wait(timeout=10)


class TestSnapshots:
    def test_snapshot_round_trip(self, tmp_path):
        snapshot_dir = tmp_path / "snaps"
        app = create_app(snapshot_dir=snapshot_dir)
        client = TestClient(app)
        sid = make_session(client)["id"]
        put_all(client, sid, MX_JUDGMENTS)
        saved = json.loads((snapshot_dir / f"{sid}.json").read_text())
        assert saved["matrix"][0][1] == 2.0

        # A fresh app over the same directory restores the session.
        revived = TestClient(create_app(snapshot_dir=snapshot_dir))
        analysis = revived.get(f"/api/sessions/{sid}/analysis")
        assert analysis.status_code == 200
        assert analysis.json()["koczkodaj"] == 0.5

import json
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from aeroshield import Engine
from aeroshield.cli import main
from aeroshield.runlog import RunLog
from aeroshield.server import create_app


@pytest.fixture()
def client(tmp_path):
    log = RunLog(tmp_path / "runs.jsonl")
    log.ensure_writable()
    app = create_app(Engine(), log)
    with TestClient(app) as client:
        client.run_log = log
        yield client


class TestScenarios:
    def test_catalog(self, client):
        payload = client.get("/api/v1/scenarios").json()
        ids = {s["id"] for s in payload["scenarios"]}
        assert "decadal-active" in ids and "pmf" in ids
        assert payload["policy"]["public_limit_sv"] == 1e-3
        assert payload["altitude_band"] == {
            "floor_km": 7.0, "ceiling_km": 12.0, "reference_km": 12.0,
        }

    def test_unrated_recurrence_serializes_as_null(self, client):
        payload = client.get("/api/v1/scenarios").json()
        pmf = next(s for s in payload["scenarios"] if s["id"] == "pmf")
        assert pmf["recurrence_years"] is None
        assert pmf["annual_rate_per_year"] == 0.0


class TestDoseProfile:
    def test_rows_contain_profile_anchors(self, client):
        resp = client.get("/api/v1/dose-profile", params={"scenario": "decadal-active", "points": 3})
        rows = resp.json()["rows"]
        triples = {(r["depth_gcm2"], r["dose_sv"]) for r in rows}
        assert (234.0, 1.2e-3) in triples
        assert (365.0, 4.5e-4) in triples
        assert (484.0, 1.2e-4) in triples

    def test_unknown_scenario_404(self, client):
        resp = client.get("/api/v1/dose-profile", params={"scenario": "no-such"})
        assert resp.status_code == 404

    def test_bad_points_400(self, client):
        resp = client.get("/api/v1/dose-profile", params={"scenario": "pmf", "points": 1})
        assert resp.status_code == 400


class TestPlan:
    def test_decadal_public(self, client):
        resp = client.post("/api/v1/plan", json={"scenario": "decadal-active", "limit_msv": 1})
        assert resp.status_code == 200
        body = resp.json()
        assert body["recommendation"]["loss_cents"] == 468_000
        assert body["recommendation"]["plan"]["label"] == "Descend 9.5 km"

    def test_each_plan_appends_one_log_line(self, client):
        for _ in range(3):
            client.post("/api/v1/plan", json={"scenario": "decadal-active", "limit_msv": 1})
        assert len(client.run_log.read()) == 3

    def test_concurrent_plans_all_logged(self, client):
        def post(_):
            return client.post(
                "/api/v1/plan", json={"scenario": "decadal-active", "limit_msv": 1}
            ).status_code

        with ThreadPoolExecutor(max_workers=8) as pool:
            codes = list(pool.map(post, range(40)))
        assert codes == [200] * 40
        records = client.run_log.read()
        assert len(records) == 40
        assert {r.loss_cents for r in records} == {468_000}

    def test_invalid_body_400_names_field(self, client):
        resp = client.post("/api/v1/plan", json={"scenario": "decadal-active"})
        assert resp.status_code == 400
        fields = [f["field"] for f in resp.json()["fields"]]
        assert "limit_msv" in fields

    def test_unknown_scenario_404(self, client):
        resp = client.post("/api/v1/plan", json={"scenario": "no-such", "limit_msv": 1})
        assert resp.status_code == 404

    def test_domain_error_422(self, client):
        resp = client.post(
            "/api/v1/plan",
            json={"scenario": "decadal-active", "limit_msv": 1, "altitudes": [12.0]},
        )
        assert resp.status_code == 422

    def test_config_error_422(self, client):
        # carrington has no dose anchor in the default config
        resp = client.post("/api/v1/plan", json={"scenario": "carrington", "limit_msv": 1})
        assert resp.status_code == 422


class TestWhatIf:
    def test_at_cruise(self, client):
        resp = client.post(
            "/api/v1/what-if",
            json={"scenario": "decadal-active", "limit_msv": 1, "altitude_km": 12},
        )
        body = resp.json()
        assert body["dose_sv"] == 1.2e-3
        assert body["dose_msv"] == "1.20 mSv"
        assert body["band"] == "exceeds-public"
        assert body["compliant"] is False
        assert body["loss_cents"] == 0

    def test_at_9_5(self, client):
        body = client.post(
            "/api/v1/what-if",
            json={"scenario": "decadal-active", "limit_msv": 1, "altitude_km": 9.5},
        ).json()
        assert body["compliant"] is True
        assert body["loss_cents"] == 468_000
        assert body["dose_msv"] == "0.450 mSv"

    def test_above_reference_422(self, client):
        resp = client.post(
            "/api/v1/what-if",
            json={"scenario": "decadal-active", "limit_msv": 1, "altitude_km": 12.5},
        )
        assert resp.status_code == 422


class TestPremium:
    def test_exact(self, client):
        body = client.post("/api/v1/premium", json={"limit_msv": 1}).json()
        assert body["premium_cents"] == 46_800
        assert body["mode"] == "exact"

    def test_monte_carlo_deterministic(self, client):
        req = {"limit_msv": 1, "mode": "mc", "years": 1500, "seed": 4}
        a = client.post("/api/v1/premium", json=req).json()
        b = client.post("/api/v1/premium", json=req).json()
        assert a == b
        assert a["n_years"] == 1500

    def test_bad_mode_422(self, client):
        resp = client.post("/api/v1/premium", json={"limit_msv": 1, "mode": "magic"})
        assert resp.status_code == 422


class TestCliHttpParity:
    def test_plan_answers_identical(self, client, capsys):
        http = client.post(
            "/api/v1/plan",
            json={"scenario": "decadal-active", "limit_msv": 1, "altitudes": [9.5, 7.0]},
        ).json()
        code = main(
            ["plan", "--scenario", "decadal-active", "--limit-msv", "1",
             "--altitudes", "9.5", "7", "--json"]
        )
        assert code == 0
        cli = json.loads(capsys.readouterr().out)
        assert cli == http

    def test_dose_profile_identical(self, client, capsys):
        http = client.get(
            "/api/v1/dose-profile", params={"scenario": "pmf", "points": 7}
        ).json()
        main(["profile", "--scenario", "pmf", "--points", "7", "--format", "json"])
        cli = json.loads(capsys.readouterr().out)
        assert cli == http

    def test_premium_identical(self, client, capsys):
        http = client.post(
            "/api/v1/premium",
            json={"limit_msv": 1, "mode": "mc", "years": 1000, "seed": 3},
        ).json()
        main(["premium", "--limit-msv", "1", "--mode", "mc",
              "--years", "1000", "--seed", "3", "--json"])
        cli = json.loads(capsys.readouterr().out)
        assert cli == http

import json

import pytest

from aeroshield.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDoseCommand:
    def test_decadal_at_7km(self, capsys):
        code, out, _ = run(capsys, "dose", "--scenario", "decadal-active", "--altitude-km", "7")
        assert code == 0
        assert "0.120 mSv" in out

    def test_json_output_round_trips(self, capsys):
        code, out, _ = run(
            capsys, "dose", "--scenario", "decadal-active", "--altitude-km", "9.5", "--json"
        )
        assert code == 0
        parsed = json.loads(out)
        assert parsed["dose_sv"] == 4.5e-4
        assert json.loads(json.dumps(parsed, indent=2, sort_keys=True)) == parsed

    def test_unknown_scenario_exits_2(self, capsys):
        code, _, err = run(capsys, "dose", "--scenario", "no-such", "--altitude-km", "7")
        assert code == 2
        assert "no-such" in err

    def test_altitude_out_of_domain_exits_3(self, capsys):
        code, _, err = run(capsys, "dose", "--scenario", "decadal-active", "--altitude-km", "15")
        assert code == 3
        assert "altitude" in err

    def test_energy_mode(self, capsys):
        code, out, _ = run(
            capsys, "dose", "--scenario", "spot-max-active",
            "--altitude-km", "12", "--mode", "energy",
        )
        assert code == 0
        assert "mSv" in out

    def test_anchor_mode_without_dose_exits_3(self, capsys):
        code, _, err = run(capsys, "dose", "--scenario", "carrington", "--altitude-km", "12")
        assert code == 3


class TestPlanCommand:
    def test_decadal_public(self, capsys):
        code, out, _ = run(capsys, "plan", "--scenario", "decadal-active", "--limit-msv", "1")
        assert code == 0
        assert "Descend 9.5 km" in out
        assert "$4,680.00" in out

    def test_json_structure(self, capsys):
        code, out, _ = run(
            capsys, "plan", "--scenario", "decadal-active", "--limit-msv", "1", "--json"
        )
        parsed = json.loads(out)
        assert parsed["recommendation"]["loss_cents"] == 468_000
        assert [e["plan"]["kind"] for e in parsed["evaluations"]] == [
            "proceed", "descend", "descend", "cancel",
        ]

    def test_continuous_flag(self, capsys):
        code, out, _ = run(
            capsys, "plan", "--scenario", "decadal-active", "--limit-msv", "1",
            "--continuous", "--json",
        )
        parsed = json.loads(out)
        opt = parsed["continuous_optimum"]
        assert opt["plan"]["altitude_km"] == pytest.approx(11.535, abs=0.01)
        assert parsed["recommendation"]["loss_cents"] == 330_000

    def test_unknown_flag_exits_2(self, capsys):
        assert main(["plan", "--scenario", "decadal-active", "--frobnicate"]) == 2

    def test_log_flag_appends_one_line(self, capsys, tmp_path):
        log = tmp_path / "runs.jsonl"
        code, _, _ = run(
            capsys, "plan", "--scenario", "decadal-active", "--limit-msv", "1",
            "--log", str(log),
        )
        assert code == 0
        lines = log.read_text().strip().splitlines()
        assert len(lines) == 1
        record = json.loads(lines[0])
        assert record["plan_kind"] == "descend"
        assert record["loss_cents"] == 468_000

    def test_log_env_variable(self, capsys, tmp_path, monkeypatch):
        log = tmp_path / "env-runs.jsonl"
        monkeypatch.setenv("AEROSHIELD_LOG", str(log))
        run(capsys, "plan", "--scenario", "decadal-active", "--limit-msv", "1")
        assert len(log.read_text().strip().splitlines()) == 1


class TestProfileCommand:
    def test_csv_header_and_anchor_rows(self, capsys):
        code, out, _ = run(capsys, "profile", "--scenario", "decadal-active", "--points", "3")
        lines = out.strip().splitlines()
        assert lines[0] == "depth_gcm2,altitude_km,dose_sv"
        body = "\n".join(lines[1:])
        assert "234.0,12.0,0.0012" in body
        assert "365.0,9.5,0.00045" in body
        assert "484.0,7.0,0.00012" in body

    def test_json_format(self, capsys):
        code, out, _ = run(
            capsys, "profile", "--scenario", "decadal-active",
            "--points", "5", "--format", "json",
        )
        parsed = json.loads(out)
        surface = parsed["rows"][-1]
        assert surface["depth_gcm2"] == 1037.0
        assert surface["extrapolated"] is True


class TestPremiumCommand:
    def test_exact_mode(self, capsys):
        code, out, _ = run(capsys, "premium", "--limit-msv", "1", "--json")
        parsed = json.loads(out)
        assert parsed["premium_cents"] == 46_800
        assert parsed["premium_usd"] == "$468.00"

    def test_mc_mode_deterministic(self, capsys):
        args = ["premium", "--limit-msv", "1", "--mode", "mc",
                "--years", "2000", "--seed", "9", "--json"]
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert out1 == out2
        parsed = json.loads(out1)
        assert parsed["n_years"] == 2000
        assert parsed["standard_error_cents"] > 0


class TestConfigFlag:
    def test_fare_override(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"cost": {"fare_usd": 200}}))
        code, out, _ = run(
            capsys, "--config", str(cfg), "plan",
            "--scenario", "pmf", "--limit-msv", "1",
        )
        assert code == 0
        assert "$28,800.00" in out

    def test_invalid_config_exits_2(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("{\"atmos\": 1}")
        code, _, err = run(capsys, "--config", str(cfg), "premium", "--limit-msv", "1")
        assert code == 2
        assert "unknown config keys" in err

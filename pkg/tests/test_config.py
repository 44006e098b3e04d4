import json

import pytest

from aeroshield import (
    ConfigError,
    EngineConfig,
    UnknownScenarioError,
    cancellation_loss,
    config_from_dict,
    default_config,
    load_config,
)


def write_config(tmp_path, data):
    path = tmp_path / "config.json"
    path.write_text(json.dumps(data))
    return path


class TestLoadConfig:
    def test_empty_object_gives_defaults(self, tmp_path):
        cfg = load_config(write_config(tmp_path, {}))
        assert cfg.fingerprint() == default_config().fingerprint()

    def test_none_path_gives_defaults(self):
        assert load_config(None).fingerprint() == default_config().fingerprint()

    def test_fare_override_flows_downstream(self, tmp_path):
        cfg = load_config(write_config(tmp_path, {"cost": {"fare_usd": 200}}))
        assert cancellation_loss(cfg.cost) == 2_880_000

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(tmp_path / "nope.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ConfigError):
            load_config(path)


class TestAtmosphereOverride:
    def test_custom_anchors(self):
        cfg = config_from_dict(
            {"atmosphere": {"anchors": [[12, 243], [9.5, 365], [7, 484], [0, 1037]]}}
        )
        assert cfg.atmosphere.anchors[0] == (12.0, 243.0)

    def test_out_of_order_anchors_name_the_field(self):
        with pytest.raises(ConfigError, match="atmosphere.anchors"):
            config_from_dict({"atmosphere": {"anchors": [[7, 484], [12, 234]]}})


class TestScenarioMerge:
    def test_override_existing_field(self):
        cfg = config_from_dict(
            {"scenarios": [{"id": "annual-active", "reference_dose_sv": 8e-4}]}
        )
        assert cfg.scenario("annual-active").reference_dose_sv == 8e-4
        # untouched fields survive the merge
        assert cfg.scenario("annual-active").recurrence_years == 1.0

    def test_add_new_scenario(self):
        cfg = config_from_dict(
            {
                "scenarios": [
                    {"id": "drill", "recurrence_years": 2.0, "reference_dose_sv": 3e-4}
                ]
            }
        )
        assert cfg.scenario("drill").label == "drill"

    def test_new_scenario_requires_recurrence(self):
        with pytest.raises(ConfigError, match="recurrence_years"):
            config_from_dict({"scenarios": [{"id": "drill", "reference_dose_sv": 3e-4}]})

    def test_unknown_scenario_field(self):
        with pytest.raises(ConfigError, match="unknown fields"):
            config_from_dict({"scenarios": [{"id": "pmf", "color": "red"}]})

    def test_lookup_failure(self):
        with pytest.raises(UnknownScenarioError):
            default_config().scenario("no-such")


class TestOtherSections:
    def test_frequency_points_override(self):
        cfg = config_from_dict({"frequency_points": [[13, 0.25], [45, 0.006], [1001, 0.0007]]})
        assert cfg.frequency.points[0] == (13.0, 0.25)

    def test_frequency_mode_override(self):
        cfg = config_from_dict({"frequency_mode": "least-squares-powerlaw"})
        assert cfg.frequency.interpolation_mode == "least-squares-powerlaw"

    def test_profile_merge_feeds_energy_scaling(self):
        cfg = config_from_dict(
            {"dose_profiles": {"decadal-active": [[234, 2.4e-3], [365, 9e-4], [484, 2.4e-4]]}}
        )
        assert cfg.shape_profile.anchors[0] == (234.0, 2.4e-3)

    def test_policy_partial_override(self):
        cfg = config_from_dict({"policy": {"public_limit_sv": 5e-4}})
        assert cfg.policy.public_limit_sv == 5e-4
        assert cfg.policy.occupational_limit_sv == 2e-2

    def test_policy_ordering_enforced(self):
        with pytest.raises(ConfigError):
            config_from_dict({"policy": {"public_limit_sv": 0.5}})

    def test_line_item_usd_half_up(self):
        cfg = config_from_dict({"cost": {"line_items": {"tax": 15.675}}})
        assert cfg.cost.line_items["tax"] == 1568

    def test_line_item_null_removes(self):
        cfg = config_from_dict({"cost": {"line_items": {"tax": None}}})
        assert "tax" not in cfg.cost.line_items

    def test_unknown_top_level_key(self):
        with pytest.raises(ConfigError, match="unknown config keys"):
            config_from_dict({"atmos": {}})

    def test_loss_convention_override(self):
        cfg = config_from_dict({"loss_convention": "incremental"})
        assert cfg.loss_convention == "incremental"
        with pytest.raises(ConfigError):
            config_from_dict({"loss_convention": "bogus"})


class TestFingerprint:
    def test_stable_for_identical_inputs(self):
        a = config_from_dict({"cost": {"fare_usd": 200}})
        b = config_from_dict({"cost": {"fare_usd": 200}})
        assert a.fingerprint() == b.fingerprint()

    def test_differs_when_config_differs(self):
        a = default_config()
        b = config_from_dict({"cost": {"fare_usd": 200}})
        assert a.fingerprint() != b.fingerprint()

    def test_duplicate_scenario_ids_rejected(self):
        scenarios = default_config().scenarios
        with pytest.raises(ConfigError):
            EngineConfig(scenarios=scenarios + (scenarios[0],))

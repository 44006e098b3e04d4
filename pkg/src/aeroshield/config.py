"""Built-in defaults, JSON config ingestion, and the merged engine configuration.

A config file is a JSON object whose keys override pieces of the built-in
defaults:

    atmosphere        {"anchors": [[altitude_km, depth_gcm2], ...],
                       "reference_altitude_km": 12}
    scenarios         [{"id": ..., <FlareScenario fields>}, ...]
                      merged by id; unknown ids define new scenarios
    frequency_points  [[x_magnitude, annual_probability], ...]
    frequency_mode    "piecewise-loglog" | "least-squares-powerlaw"
    dose_profiles     {"label": [[depth_gcm2, dose_sv], ...], ...}
    policy            {"public_limit_sv": ..., "occupational_limit_sv": ...,
                       "deterministic_limit_sv": ..., "fatal_dose_sv": ...,
                       "background_annual_sv": ...}
    cost              {"line_items": {"name": usd | null, ...},
                       "fare_usd": ..., "seats": ...}
                      USD amounts convert to cents with half-up rounding;
                      null removes a line item
    loss_convention   "published" | "incremental"
    dose_mode         "anchor" | "energy"
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from .atmosphere import AltitudeDepthTable, DEFAULT_TABLE
from .costs import (
    CONVENTION_INCREMENTAL,
    CONVENTION_PUBLISHED,
    DEFAULT_COST_CONFIG,
    FlightCostConfig,
    round_cents,
)
from .dose import (
    DEFAULT_POLICY,
    DEFAULT_PROFILES,
    DEFAULT_SCALING,
    DOSE_MODE_ANCHOR,
    DOSE_MODE_ENERGY,
    DoseDepthProfile,
    DoseLimitPolicy,
    EnergyScaling,
)
from .errors import ConfigError, UnknownScenarioError
from .flares import FlareScenario, FrequencyCatalog, builtin_scenarios

_KNOWN_KEYS = {
    "atmosphere",
    "scenarios",
    "frequency_points",
    "frequency_mode",
    "dose_profiles",
    "policy",
    "cost",
    "loss_convention",
    "dose_mode",
}

_SCENARIO_FIELDS = {
    "id",
    "label",
    "recurrence_years",
    "sunspot_area_fraction",
    "energy_erg",
    "reference_dose_sv",
    "x_magnitude",
}

_POLICY_FIELDS = {
    "public_limit_sv",
    "occupational_limit_sv",
    "deterministic_limit_sv",
    "fatal_dose_sv",
    "background_annual_sv",
}


@dataclass(frozen=True)
class EngineConfig:
    """The fully merged, validated engine configuration."""

    atmosphere: AltitudeDepthTable = DEFAULT_TABLE
    scenarios: tuple[FlareScenario, ...] = field(default_factory=builtin_scenarios)
    frequency: FrequencyCatalog = field(default_factory=FrequencyCatalog)
    profiles: Mapping[str, DoseDepthProfile] = field(
        default_factory=lambda: dict(DEFAULT_PROFILES)
    )
    scaling: EnergyScaling = DEFAULT_SCALING
    policy: DoseLimitPolicy = DEFAULT_POLICY
    cost: FlightCostConfig = DEFAULT_COST_CONFIG
    loss_convention: str = CONVENTION_PUBLISHED
    dose_mode: str = DOSE_MODE_ANCHOR

    def __post_init__(self) -> None:
        ids = [s.id for s in self.scenarios]
        if len(set(ids)) != len(ids):
            raise ConfigError("scenario ids must be unique")
        if self.loss_convention not in (CONVENTION_PUBLISHED, CONVENTION_INCREMENTAL):
            raise ConfigError(f"unknown loss_convention {self.loss_convention!r}")
        if self.dose_mode not in (DOSE_MODE_ANCHOR, DOSE_MODE_ENERGY):
            raise ConfigError(f"unknown dose_mode {self.dose_mode!r}")

    def scenario(self, scenario_id: str) -> FlareScenario:
        for s in self.scenarios:
            if s.id == scenario_id:
                return s
        raise UnknownScenarioError(f"unknown scenario {scenario_id!r}")

    @property
    def shape_profile(self) -> DoseDepthProfile:
        """The attenuation shape shared by all scenarios."""
        return self.scaling.shape_profile

    def dose_ready(self, scenario: FlareScenario) -> bool:
        """True when the scenario can be dosed under the active mode."""
        if self.dose_mode == DOSE_MODE_ENERGY:
            return scenario.energy_erg is not None
        return scenario.reference_dose_sv is not None

    def to_json_dict(self) -> dict[str, Any]:
        """Canonical JSON-serializable form (infinities become null)."""

        def _num(x: float | None) -> float | None:
            if x is None or (isinstance(x, float) and math.isinf(x)):
                return None
            return x

        return {
            "atmosphere": {
                "anchors": [[a, d] for a, d in self.atmosphere.anchors],
                "reference_altitude_km": self.atmosphere.reference_altitude_km,
            },
            "scenarios": [
                {
                    "id": s.id,
                    "label": s.label,
                    "recurrence_years": _num(s.recurrence_years),
                    "annual_rate_per_year": s.annual_rate,
                    "sunspot_area_fraction": s.sunspot_area_fraction,
                    "energy_erg": s.energy_erg,
                    "reference_dose_sv": s.reference_dose_sv,
                    "x_magnitude": s.x_magnitude,
                }
                for s in self.scenarios
            ],
            "frequency_points": [[x, p] for x, p in self.frequency.points],
            "frequency_mode": self.frequency.interpolation_mode,
            "dose_profiles": {
                label: [[d, y] for d, y in prof.anchors]
                for label, prof in sorted(self.profiles.items())
            },
            "policy": dataclasses.asdict(self.policy),
            "cost": {
                "line_items_cents": dict(sorted(self.cost.line_items.items())),
                "fare_cents": self.cost.fare_cents,
                "seats": self.cost.seats,
            },
            "loss_convention": self.loss_convention,
            "dose_mode": self.dose_mode,
        }

    def fingerprint(self) -> str:
        """Short stable hash of the merged configuration."""
        canonical = json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:12]


def default_config() -> EngineConfig:
    return EngineConfig()


def _merge_scenarios(overrides: Any) -> tuple[FlareScenario, ...]:
    if not isinstance(overrides, list):
        raise ConfigError("scenarios: expected a list of scenario objects")
    catalog = {s.id: s for s in builtin_scenarios()}
    for i, entry in enumerate(overrides):
        if not isinstance(entry, dict):
            raise ConfigError(f"scenarios[{i}]: expected an object")
        unknown = set(entry) - _SCENARIO_FIELDS
        if unknown:
            raise ConfigError(f"scenarios[{i}]: unknown fields {sorted(unknown)}")
        sid = entry.get("id")
        if not isinstance(sid, str) or not sid:
            raise ConfigError(f"scenarios[{i}].id: required non-empty string")
        fields = {k: v for k, v in entry.items() if k != "id"}
        if sid in catalog:
            catalog[sid] = dataclasses.replace(catalog[sid], **fields)
        else:
            if "recurrence_years" not in fields:
                raise ConfigError(f"scenarios[{i}] ({sid}): new scenario needs recurrence_years")
            fields.setdefault("label", sid)
            catalog[sid] = FlareScenario(id=sid, **fields)
    return tuple(catalog.values())


def _merge_profiles(overrides: Any) -> dict[str, DoseDepthProfile]:
    if not isinstance(overrides, dict):
        raise ConfigError("dose_profiles: expected an object of label -> anchors")
    profiles = dict(DEFAULT_PROFILES)
    for label, anchors in overrides.items():
        if not isinstance(anchors, list):
            raise ConfigError(f"dose_profiles.{label}: expected a list of [depth, dose] pairs")
        profiles[label] = DoseDepthProfile(
            event_label=label,
            anchors=tuple((d, y) for d, y in anchors),
        )
    return profiles


def _cost_from_dict(data: Any) -> FlightCostConfig:
    if not isinstance(data, dict):
        raise ConfigError("cost: expected an object")
    unknown = set(data) - {"line_items", "fare_usd", "seats"}
    if unknown:
        raise ConfigError(f"cost: unknown fields {sorted(unknown)}")
    items = dict(DEFAULT_COST_CONFIG.line_items)
    for name, usd in data.get("line_items", {}).items():
        if usd is None:
            items.pop(name, None)
            continue
        if not isinstance(usd, (int, float)) or isinstance(usd, bool):
            raise ConfigError(f"cost.line_items.{name}: expected a USD number or null")
        if usd < 0:
            raise ConfigError(f"cost.line_items.{name}: must be >= 0")
        items[name] = round_cents(usd * 100.0)
    fare_cents = DEFAULT_COST_CONFIG.fare_cents
    if "fare_usd" in data:
        fare = data["fare_usd"]
        if not isinstance(fare, (int, float)) or isinstance(fare, bool) or fare < 0:
            raise ConfigError("cost.fare_usd: expected a USD number >= 0")
        fare_cents = round_cents(fare * 100.0)
    seats = data.get("seats", DEFAULT_COST_CONFIG.seats)
    if not isinstance(seats, int) or isinstance(seats, bool) or seats < 0:
        raise ConfigError("cost.seats: expected an integer >= 0")
    return FlightCostConfig(line_items=items, fare_cents=fare_cents, seats=seats)


def config_from_dict(data: Mapping[str, Any]) -> EngineConfig:
    """Merge a parsed config object onto the built-in defaults and validate."""
    if not isinstance(data, Mapping):
        raise ConfigError("config root must be a JSON object")
    unknown = set(data) - _KNOWN_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys {sorted(unknown)}")

    atmosphere = DEFAULT_TABLE
    if "atmosphere" in data:
        atm = data["atmosphere"]
        if not isinstance(atm, dict) or set(atm) - {"anchors", "reference_altitude_km"}:
            raise ConfigError("atmosphere: expected {anchors, reference_altitude_km?}")
        try:
            atmosphere = AltitudeDepthTable(
                anchors=tuple((a, d) for a, d in atm.get("anchors", DEFAULT_TABLE.anchors)),
                reference_altitude_km=atm.get(
                    "reference_altitude_km", DEFAULT_TABLE.reference_altitude_km
                ),
            )
        except ConfigError as exc:
            raise ConfigError(f"atmosphere.anchors: {exc}") from exc

    scenarios: tuple[FlareScenario, ...] = builtin_scenarios()
    if "scenarios" in data:
        scenarios = _merge_scenarios(data["scenarios"])

    frequency = FrequencyCatalog()
    freq_kwargs: dict[str, Any] = {}
    if "frequency_points" in data:
        pts = data["frequency_points"]
        if not isinstance(pts, list):
            raise ConfigError("frequency_points: expected a list of [magnitude, probability]")
        freq_kwargs["points"] = tuple((x, p) for x, p in pts)
    if "frequency_mode" in data:
        freq_kwargs["interpolation_mode"] = data["frequency_mode"]
    if freq_kwargs:
        try:
            frequency = FrequencyCatalog(**freq_kwargs)
        except ConfigError as exc:
            raise ConfigError(f"frequency_points: {exc}") from exc

    profiles = dict(DEFAULT_PROFILES)
    if "dose_profiles" in data:
        profiles = _merge_profiles(data["dose_profiles"])

    scaling = DEFAULT_SCALING
    shape = profiles.get(DEFAULT_SCALING.shape_profile.event_label)
    if shape is not None and shape is not DEFAULT_SCALING.shape_profile:
        scaling = dataclasses.replace(DEFAULT_SCALING, shape_profile=shape)

    policy = DEFAULT_POLICY
    if "policy" in data:
        pol = data["policy"]
        if not isinstance(pol, dict):
            raise ConfigError("policy: expected an object")
        unknown = set(pol) - _POLICY_FIELDS
        if unknown:
            raise ConfigError(f"policy: unknown fields {sorted(unknown)}")
        try:
            policy = dataclasses.replace(DEFAULT_POLICY, **pol)
        except ConfigError as exc:
            raise ConfigError(f"policy: {exc}") from exc

    cost = DEFAULT_COST_CONFIG
    if "cost" in data:
        cost = _cost_from_dict(data["cost"])

    return EngineConfig(
        atmosphere=atmosphere,
        scenarios=scenarios,
        frequency=frequency,
        profiles=profiles,
        scaling=scaling,
        policy=policy,
        cost=cost,
        loss_convention=data.get("loss_convention", CONVENTION_PUBLISHED),
        dose_mode=data.get("dose_mode", DOSE_MODE_ANCHOR),
    )


def load_config(path: str | Path | None) -> EngineConfig:
    """Load a JSON config file merged onto the defaults; None loads defaults."""
    if path is None:
        return default_config()
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return config_from_dict(data)

"""The shared operational surface used by the CLI, the HTTP API, and reports.

Every user-facing answer is produced here as a JSON-serializable dict, so
the CLI and the HTTP service cannot disagree: they print or transmit the
same objects.
"""

from __future__ import annotations

import math

import numpy as np

from .actuarial import mitigated_risk_items, premium_exact, premium_monte_carlo
from .atmosphere import altitude_at_depth, depth_at_altitude
from .config import EngineConfig
from .costs import MitigationPlan, PLAN_DESCEND, plan_loss, round_cents
from .decision import (
    DEFAULT_DESCENT_ALTITUDES_KM,
    PlanEvaluation,
    evaluate_plans,
    optimal_continuous_altitude,
    recommend,
)
from .dose import (
    classify_dose,
    dose_at_depth,
    dose_for_event,
    event_profile,
    is_extrapolated_depth,
)
from .errors import DomainError
from .flares import FlareScenario, annual_exceedance_probability
from .formatting import format_msv, format_usd, plan_label

PREMIUM_MODE_EXACT = "exact"
PREMIUM_MODE_MC = "mc"

DEFAULT_PROFILE_POINTS = 25


class Engine:
    """Stateless facade over a merged configuration."""

    def __init__(self, config: EngineConfig | None = None):
        self.config = config or EngineConfig()
        self._hash = self.config.fingerprint()

    # -- serialization helpers -------------------------------------------

    def _scenario_brief(self, scenario: FlareScenario) -> dict:
        return {"id": scenario.id, "label": scenario.label}

    def _evaluation_dict(self, evaluation: PlanEvaluation) -> dict:
        plan = evaluation.plan
        return {
            "plan": {
                "kind": plan.kind,
                "altitude_km": plan.altitude_km,
                "label": plan_label(
                    plan.kind,
                    plan.altitude_km,
                    self.config.atmosphere.reference_altitude_km,
                ),
            },
            "dose_sv": evaluation.dose_sv,
            "dose_msv": format_msv(evaluation.dose_sv),
            "band": evaluation.band.label,
            "compliant": evaluation.compliant,
            "loss_cents": evaluation.loss_cents,
            "loss_usd": format_usd(evaluation.loss_cents),
        }

    # -- catalog -----------------------------------------------------------

    def scenarios_report(self) -> dict:
        cfg = self.config
        return {
            "scenarios": [
                {
                    "id": s.id,
                    "label": s.label,
                    "recurrence_years": None if math.isinf(s.recurrence_years) else s.recurrence_years,
                    "annual_rate_per_year": s.annual_rate,
                    "sunspot_area_fraction": s.sunspot_area_fraction,
                    "energy_erg": s.energy_erg,
                    "reference_dose_sv": s.reference_dose_sv,
                    "x_magnitude": s.x_magnitude,
                    "dose_ready": cfg.dose_ready(s),
                }
                for s in cfg.scenarios
            ],
            "policy": {
                "public_limit_sv": cfg.policy.public_limit_sv,
                "occupational_limit_sv": cfg.policy.occupational_limit_sv,
                "deterministic_limit_sv": cfg.policy.deterministic_limit_sv,
                "fatal_dose_sv": cfg.policy.fatal_dose_sv,
                "background_annual_sv": cfg.policy.background_annual_sv,
            },
            "altitude_band": {
                "floor_km": 7.0,
                "ceiling_km": cfg.atmosphere.reference_altitude_km,
                "reference_km": cfg.atmosphere.reference_altitude_km,
            },
            "config_hash": self._hash,
        }

    # -- dose / what-if ----------------------------------------------------

    def dose_report(self, scenario_id: str, altitude_km: float, mode: str | None = None) -> dict:
        cfg = self.config
        scenario = cfg.scenario(scenario_id)
        mode = mode or cfg.dose_mode
        depth = depth_at_altitude(cfg.atmosphere, altitude_km)
        dose = dose_for_event(
            scenario,
            altitude_km,
            mode=mode,
            table=cfg.atmosphere,
            shape=cfg.shape_profile,
            scaling=cfg.scaling,
        )
        return {
            "scenario": self._scenario_brief(scenario),
            "altitude_km": altitude_km,
            "depth_gcm2": depth,
            "mode": mode,
            "dose_sv": dose,
            "dose_msv": format_msv(dose),
            "band": classify_dose(dose, cfg.policy).label,
            "extrapolated": is_extrapolated_depth(cfg.shape_profile, depth),
            "config_hash": self._hash,
        }

    def what_if(self, scenario_id: str, limit_msv: float, altitude_km: float) -> dict:
        cfg = self.config
        scenario = cfg.scenario(scenario_id)
        limit_sv = limit_msv * 1e-3
        if not limit_sv > 0:
            raise DomainError(f"limit_msv must be > 0, got {limit_msv}")
        reference = cfg.atmosphere.reference_altitude_km
        if altitude_km > reference:
            raise DomainError(
                f"altitude {altitude_km} km above the reference altitude {reference} km"
            )
        report = self.dose_report(scenario_id, altitude_km)
        if altitude_km == reference:
            plan = MitigationPlan.proceed()
        else:
            plan = MitigationPlan.descend(altitude_km)
        loss = plan_loss(plan, cfg.cost, cfg.atmosphere, cfg.loss_convention)
        return {
            "scenario": report["scenario"],
            "limit_msv": limit_msv,
            "limit_sv": limit_sv,
            "altitude_km": altitude_km,
            "depth_gcm2": report["depth_gcm2"],
            "dose_sv": report["dose_sv"],
            "dose_msv": report["dose_msv"],
            "band": report["band"],
            "compliant": report["dose_sv"] <= limit_sv,
            "plan": {
                "kind": plan.kind,
                "altitude_km": plan.altitude_km,
                "label": plan_label(plan.kind, plan.altitude_km, reference),
            },
            "loss_cents": loss,
            "loss_usd": format_usd(loss),
            "config_hash": self._hash,
        }

    # -- planning ------------------------------------------------------------

    def plan_report(
        self,
        scenario_id: str,
        limit_msv: float,
        altitudes: list[float] | None = None,
        continuous: bool = False,
    ) -> dict:
        cfg = self.config
        scenario = cfg.scenario(scenario_id)
        limit_sv = limit_msv * 1e-3
        if not limit_sv > 0:
            raise DomainError(f"limit_msv must be > 0, got {limit_msv}")
        menu = list(altitudes) if altitudes is not None else list(DEFAULT_DESCENT_ALTITUDES_KM)
        optimum = None
        if continuous:
            optimum = optimal_continuous_altitude(scenario, limit_sv, cfg)
            if (
                optimum is not None
                and optimum.plan.kind == PLAN_DESCEND
                and optimum.plan.altitude_km not in menu
            ):
                menu.append(optimum.plan.altitude_km)
        evaluations = evaluate_plans(scenario, limit_sv, menu, cfg)
        best = recommend(scenario, limit_sv, menu, cfg)
        return {
            "scenario": self._scenario_brief(scenario),
            "limit_msv": limit_msv,
            "limit_sv": limit_sv,
            "evaluations": [self._evaluation_dict(e) for e in evaluations],
            "recommendation": self._evaluation_dict(best),
            "continuous_optimum": self._evaluation_dict(optimum) if optimum else None,
            "config_hash": self._hash,
        }

    # -- profile -------------------------------------------------------------

    def profile_rows(self, scenario_id: str, points: int = DEFAULT_PROFILE_POINTS) -> list[dict]:
        """Sampled dose curve rows: profile anchors plus an even depth grid.

        The grid spans the shape's shallowest anchor down to the table
        surface; anchor depths are always present among the rows.
        """
        cfg = self.config
        scenario = cfg.scenario(scenario_id)
        if points < 2:
            raise DomainError(f"points must be >= 2, got {points}")
        profile = event_profile(
            scenario, cfg.dose_mode, shape=cfg.shape_profile, scaling=cfg.scaling
        )
        table = cfg.atmosphere
        lo = max(cfg.shape_profile.min_depth_gcm2, table.min_depth_gcm2)
        hi = table.max_depth_gcm2
        depths = set(np.linspace(lo, hi, points).tolist())
        depths.update(d for d, _ in cfg.shape_profile.anchors if lo <= d <= hi)
        rows = []
        for depth in sorted(depths):
            dose = dose_at_depth(profile, depth) if profile is not None else 0.0
            rows.append(
                {
                    "depth_gcm2": depth,
                    "altitude_km": altitude_at_depth(table, depth),
                    "dose_sv": dose,
                    "dose_msv": format_msv(dose),
                    "extrapolated": is_extrapolated_depth(cfg.shape_profile, depth),
                }
            )
        return rows

    def profile_report(self, scenario_id: str, points: int = DEFAULT_PROFILE_POINTS) -> dict:
        return {
            "scenario": self._scenario_brief(self.config.scenario(scenario_id)),
            "rows": self.profile_rows(scenario_id, points),
            "config_hash": self._hash,
        }

    # -- premium ---------------------------------------------------------------

    def priceable_scenarios(self) -> list[FlareScenario]:
        """Scenarios that can be dosed under the active mode (and thus priced)."""
        return [s for s in self.config.scenarios if self.config.dose_ready(s)]

    def premium_report(
        self,
        limit_msv: float,
        mode: str = PREMIUM_MODE_EXACT,
        years: int = 10_000,
        seed: int = 0,
        exposure_fraction: float = 1.0,
    ) -> dict:
        cfg = self.config
        limit_sv = limit_msv * 1e-3
        if not limit_sv > 0:
            raise DomainError(f"limit_msv must be > 0, got {limit_msv}")
        if mode not in (PREMIUM_MODE_EXACT, PREMIUM_MODE_MC):
            raise DomainError(f"unknown premium mode {mode!r}")
        scenarios = self.priceable_scenarios()
        items = mitigated_risk_items(scenarios, limit_sv, cfg, exposure_fraction)
        report = {
            "limit_msv": limit_msv,
            "limit_sv": limit_sv,
            "mode": mode,
            "exposure_fraction": exposure_fraction,
            "items": [
                {
                    "scenario": item.label,
                    "annual_frequency": item.annual_frequency,
                    "severity_cents": item.severity_cents,
                    "severity_usd": format_usd(item.severity_cents),
                }
                for item in items
            ],
            "config_hash": self._hash,
        }
        if mode == PREMIUM_MODE_EXACT:
            premium = premium_exact(items)
            report.update(premium_cents=premium, premium_usd=format_usd(premium))
            return report
        quote = premium_monte_carlo(
            scenarios, limit_sv, cfg, exposure_fraction, n_years=years, seed=seed
        )
        premium = round_cents(quote.expected_annual_loss_cents)
        report.update(
            premium_cents=premium,
            premium_usd=format_usd(premium),
            expected_annual_loss_cents=quote.expected_annual_loss_cents,
            standard_error_cents=quote.standard_error_cents,
            n_years=quote.n_years,
            seed=quote.seed,
        )
        return report

    # -- frequency ---------------------------------------------------------------

    def exceedance_rows(self, magnitudes: list[float]) -> list[dict]:
        return [
            {
                "x_magnitude": x,
                "annual_probability": annual_exceedance_probability(self.config.frequency, x),
            }
            for x in magnitudes
        ]

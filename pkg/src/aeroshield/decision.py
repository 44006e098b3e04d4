"""Mitigation plan evaluation and minimal-loss compliant recommendation.

For a scenario and a dose limit, the engine prices three kinds of plans:
proceed at the reference altitude, descend to a candidate altitude, or
cancel.  A plan is flyable when its dose is at or below the limit (the
operational trigger is a dose that *exceeds* the limit, so the boundary is
compliant here even though band classification treats it as exceeded).
Cancelling always complies, so a recommendation always exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .atmosphere import altitude_at_depth, depth_at_altitude
from .config import EngineConfig
from .costs import MitigationPlan, PLAN_CANCEL, PLAN_DESCEND, PLAN_PROCEED, plan_loss
from .dose import DoseBand, classify_dose, depth_for_dose_limit, dose_for_event, event_profile
from .errors import DomainError
from .flares import FlareScenario

DEFAULT_DESCENT_ALTITUDES_KM = (9.5, 7.0)

# Lowest cruise the continuous optimizer will propose; the validated
# altitude band does not extend below this.
CONTINUOUS_FLOOR_KM = 7.0

_KIND_RANK = {PLAN_PROCEED: 0, PLAN_DESCEND: 1, PLAN_CANCEL: 2}


@dataclass(frozen=True)
class PlanEvaluation:
    """One plan with its dose, band, compliance flag, and loss."""

    plan: MitigationPlan
    dose_sv: float
    band: DoseBand
    compliant: bool
    loss_cents: int


def _scenario_dose(scenario: FlareScenario, altitude_km: float, engine: EngineConfig) -> float:
    return dose_for_event(
        scenario,
        altitude_km,
        mode=engine.dose_mode,
        table=engine.atmosphere,
        shape=engine.shape_profile,
        scaling=engine.scaling,
    )


def _evaluate(
    plan: MitigationPlan,
    scenario: FlareScenario,
    policy_limit_sv: float,
    engine: EngineConfig,
) -> PlanEvaluation:
    if plan.kind == PLAN_CANCEL:
        dose = 0.0
    else:
        altitude = (
            engine.atmosphere.reference_altitude_km
            if plan.kind == PLAN_PROCEED
            else plan.altitude_km
        )
        dose = _scenario_dose(scenario, altitude, engine)
    return PlanEvaluation(
        plan=plan,
        dose_sv=dose,
        band=classify_dose(dose, engine.policy),
        compliant=dose <= policy_limit_sv,
        loss_cents=plan_loss(plan, engine.cost, engine.atmosphere, engine.loss_convention),
    )


def evaluate_plans(
    scenario: FlareScenario,
    policy_limit_sv: float,
    altitudes: list[float] | tuple[float, ...] | None = None,
    engine: EngineConfig | None = None,
) -> list[PlanEvaluation]:
    """Evaluate proceed, each candidate descent, and cancel for a scenario.

    Candidates are ordered deterministically: proceed first, descents by
    falling altitude, cancel last.  Duplicate candidate altitudes collapse.
    """
    engine = engine or EngineConfig()
    if not policy_limit_sv > 0:
        raise DomainError(f"policy limit must be > 0, got {policy_limit_sv}")
    if altitudes is None:
        altitudes = DEFAULT_DESCENT_ALTITUDES_KM
    seen: list[float] = []
    for a in altitudes:
        if not a < engine.atmosphere.reference_altitude_km:
            raise DomainError(
                f"candidate altitude {a} km must lie strictly below the "
                f"reference altitude {engine.atmosphere.reference_altitude_km} km"
            )
        depth_at_altitude(engine.atmosphere, a)  # domain check
        if a not in seen:
            seen.append(a)
    plans = [MitigationPlan.proceed()]
    plans += [MitigationPlan.descend(a) for a in sorted(seen, reverse=True)]
    plans.append(MitigationPlan.cancel())
    return [_evaluate(p, scenario, policy_limit_sv, engine) for p in plans]


def _preference_key(evaluation: PlanEvaluation, engine: EngineConfig) -> tuple:
    plan = evaluation.plan
    if plan.kind == PLAN_PROCEED:
        altitude = engine.atmosphere.reference_altitude_km
    elif plan.kind == PLAN_DESCEND:
        altitude = plan.altitude_km
    else:
        altitude = -math.inf
    # Minimal loss first; ties prefer the higher altitude, then
    # proceed > descend > cancel.
    return (evaluation.loss_cents, -altitude, _KIND_RANK[plan.kind])


def recommend(
    scenario: FlareScenario,
    policy_limit_sv: float,
    altitudes: list[float] | tuple[float, ...] | None = None,
    engine: EngineConfig | None = None,
) -> PlanEvaluation:
    """The compliant plan of minimal loss (cancel is the universal fallback)."""
    engine = engine or EngineConfig()
    evaluations = evaluate_plans(scenario, policy_limit_sv, altitudes, engine)
    compliant = [e for e in evaluations if e.compliant]
    return min(compliant, key=lambda e: _preference_key(e, engine))


def optimal_continuous_altitude(
    scenario: FlareScenario,
    policy_limit_sv: float,
    engine: EngineConfig | None = None,
    floor_km: float = CONTINUOUS_FLOOR_KM,
) -> PlanEvaluation | None:
    """Highest compliant cruise altitude in [floor, reference], with its loss.

    Because loss rises monotonically as the aircraft descends, the highest
    compliant altitude is also the cost-optimal compliant cruise.  Returns
    a proceed evaluation when no descent is needed, a descend evaluation at
    the limit-crossing altitude otherwise, and None when even the floor
    altitude exceeds the limit (callers fall back to cancel).
    """
    engine = engine or EngineConfig()
    if not policy_limit_sv > 0:
        raise DomainError(f"policy limit must be > 0, got {policy_limit_sv}")
    table = engine.atmosphere
    reference = table.reference_altitude_km
    if _scenario_dose(scenario, reference, engine) <= policy_limit_sv:
        return _evaluate(MitigationPlan.proceed(), scenario, policy_limit_sv, engine)
    profile = event_profile(
        scenario, engine.dose_mode, shape=engine.shape_profile, scaling=engine.scaling
    )
    if profile is None:  # zero-dose scenario is compliant at the reference
        return _evaluate(MitigationPlan.proceed(), scenario, policy_limit_sv, engine)
    depth = depth_for_dose_limit(profile, policy_limit_sv)
    if depth is None:
        return _evaluate(MitigationPlan.proceed(), scenario, policy_limit_sv, engine)
    if depth > depth_at_altitude(table, floor_km):
        return None
    altitude = altitude_at_depth(table, max(depth, depth_at_altitude(table, reference)))
    altitude = min(altitude, reference)
    # The analytic crossing can land a few ulps above the limit once mapped
    # back through altitude -> depth -> dose; nudge down until compliant.
    for _ in range(8):
        if _scenario_dose(scenario, altitude, engine) <= policy_limit_sv:
            break
        altitude -= 1e-9
    else:
        raise DomainError("continuous altitude search failed to converge")
    if altitude >= reference:
        return _evaluate(MitigationPlan.proceed(), scenario, policy_limit_sv, engine)
    return _evaluate(MitigationPlan.descend(altitude), scenario, policy_limit_sv, engine)

"""Risk-cost decision engine for airline operations during solar proton events.

Computes expected radiation dose at candidate flight altitudes from anchored
dose-vs-atmospheric-depth profiles, checks doses against regulatory limit
policies, prices each mitigation plan (proceed / descend / cancel),
recommends the minimal-loss compliant plan, and prices insurance premiums
from an event-frequency model.
"""

from .actuarial import (
    PremiumQuote,
    RiskItem,
    mitigated_risk_items,
    premium_exact,
    premium_monte_carlo,
)
from .atmosphere import (
    AltitudeDepthTable,
    DEFAULT_TABLE,
    altitude_at_depth,
    depth_at_altitude,
    fuel_multiplier,
)
from .config import EngineConfig, config_from_dict, default_config, load_config
from .costs import (
    FlightCostConfig,
    MitigationPlan,
    altitude_change_loss,
    cancellation_loss,
    operating_cost_total,
    plan_loss,
)
from .decision import (
    PlanEvaluation,
    evaluate_plans,
    optimal_continuous_altitude,
    recommend,
)
from .dose import (
    DoseBand,
    DoseDepthProfile,
    DoseLimitPolicy,
    EnergyScaling,
    classify_dose,
    depth_for_dose_limit,
    dose_at_depth,
    dose_for_energy,
    dose_for_event,
)
from .engine import Engine
from .errors import ConfigError, DomainError, EngineError, UnknownScenarioError
from .flares import (
    FlareScenario,
    FrequencyCatalog,
    GleRecord,
    annual_exceedance_probability,
    builtin_scenarios,
    magnitude_at_probability,
    return_period,
    sample_years,
)

__version__ = "0.1.0"

__all__ = [
    "AltitudeDepthTable",
    "ConfigError",
    "DEFAULT_TABLE",
    "DomainError",
    "DoseBand",
    "DoseDepthProfile",
    "DoseLimitPolicy",
    "Engine",
    "EngineConfig",
    "EngineError",
    "EnergyScaling",
    "FlareScenario",
    "FlightCostConfig",
    "FrequencyCatalog",
    "GleRecord",
    "MitigationPlan",
    "PlanEvaluation",
    "PremiumQuote",
    "RiskItem",
    "UnknownScenarioError",
    "altitude_at_depth",
    "altitude_change_loss",
    "annual_exceedance_probability",
    "builtin_scenarios",
    "cancellation_loss",
    "classify_dose",
    "config_from_dict",
    "default_config",
    "depth_at_altitude",
    "depth_for_dose_limit",
    "dose_at_depth",
    "dose_for_energy",
    "dose_for_event",
    "evaluate_plans",
    "fuel_multiplier",
    "load_config",
    "magnitude_at_probability",
    "mitigated_risk_items",
    "operating_cost_total",
    "optimal_continuous_altitude",
    "plan_loss",
    "premium_exact",
    "premium_monte_carlo",
    "recommend",
    "return_period",
    "sample_years",
    "__version__",
]

"""Insurance pricing: closed-form expected annual loss and Monte Carlo.

A premium is the expected annual loss over the insured events,
frequency x severity summed across risk items.  Severity defaults to the
decision engine's optimal mitigation loss, so the premium prices the
rational response rather than blanket cancellation.  The Monte Carlo
estimator samples Poisson event years and must agree with the closed form
within sampling error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import EngineConfig
from .costs import round_cents
from .decision import recommend
from .errors import DomainError
from .flares import FlareScenario, sample_years


@dataclass(frozen=True)
class RiskItem:
    """One insured event class: how often it strikes and what it costs."""

    label: str
    annual_frequency: float
    severity_cents: int

    def __post_init__(self) -> None:
        if self.annual_frequency < 0:
            raise DomainError(f"{self.label}: annual_frequency must be >= 0")
        if self.severity_cents < 0:
            raise DomainError(f"{self.label}: severity_cents must be >= 0")


@dataclass(frozen=True)
class PremiumQuote:
    """Monte Carlo premium estimate in cents per year."""

    expected_annual_loss_cents: float
    standard_error_cents: float
    n_years: int
    seed: int

    def __post_init__(self) -> None:
        if self.standard_error_cents < 0:
            raise DomainError("standard_error_cents must be >= 0")


def premium_exact(items: list[RiskItem] | tuple[RiskItem, ...]) -> int:
    """Sum of frequency x severity over all items, rounded to the nearest cent."""
    return round_cents(sum(item.annual_frequency * item.severity_cents for item in items))


def mitigated_risk_items(
    scenarios: list[FlareScenario] | tuple[FlareScenario, ...],
    policy_limit_sv: float,
    engine: EngineConfig | None = None,
    exposure_fraction: float = 1.0,
) -> list[RiskItem]:
    """Risk items whose severity is the recommended mitigation loss.

    ``exposure_fraction`` is the probability that an occurring event
    actually affects the insured flight (1 = every event strikes it).
    """
    engine = engine or EngineConfig()
    if not 0 <= exposure_fraction <= 1:
        raise DomainError(f"exposure_fraction must be in [0, 1], got {exposure_fraction}")
    items = []
    for scenario in scenarios:
        best = recommend(scenario, policy_limit_sv, engine=engine)
        items.append(
            RiskItem(
                label=scenario.id,
                annual_frequency=exposure_fraction * scenario.annual_rate,
                severity_cents=best.loss_cents,
            )
        )
    return items


def premium_monte_carlo(
    scenarios: list[FlareScenario] | tuple[FlareScenario, ...],
    policy_limit_sv: float,
    engine: EngineConfig | None = None,
    exposure_fraction: float = 1.0,
    n_years: int = 10_000,
    seed: int = 0,
) -> PremiumQuote:
    """Monte Carlo premium: simulate event years, charge each event its
    recommended mitigation loss scaled by the exposure fraction.

    Deterministic for a fixed seed.  The standard error is the sample
    standard deviation of annual losses over sqrt(n_years).
    """
    engine = engine or EngineConfig()
    if n_years < 100:
        raise DomainError(f"n_years must be >= 100, got {n_years}")
    if not 0 <= exposure_fraction <= 1:
        raise DomainError(f"exposure_fraction must be in [0, 1], got {exposure_fraction}")
    severities = {
        s.id: recommend(s, policy_limit_sv, engine=engine).loss_cents for s in scenarios
    }
    counts = sample_years(scenarios, n_years, seed)
    annual = np.zeros(n_years)
    for sid, per_year in counts.items():
        annual += per_year * (severities[sid] * exposure_fraction)
    mean = float(annual.mean()) if n_years else 0.0
    std = float(annual.std(ddof=1)) if n_years > 1 else 0.0
    return PremiumQuote(
        expected_annual_loss_cents=mean,
        standard_error_cents=std / math.sqrt(n_years),
        n_years=n_years,
        seed=seed,
    )

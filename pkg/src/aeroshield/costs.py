"""Per-flight economics and mitigation losses, all in integer cents.

The default budget is a single mid-haul flight: $11,820.60 of operating
cost, a $175 fare, and 144 seats.  Money never touches floating point
except at the one multiplier boundary, where results round half-up to the
nearest cent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .atmosphere import (
    AltitudeDepthTable,
    DEFAULT_TABLE,
    MULTIPLIER_EXACT,
    MULTIPLIER_PUBLISHED,
    fuel_multiplier,
)
from .errors import ConfigError, DomainError

# Loss conventions for an altitude change.  "published" charges the whole
# multiplied fuel bill as the loss, reproducing the reference figures
# ($4,680 at 1.56 and $6,210 at 2.07); "incremental" charges only the fuel
# increase over the baseline, the economically standard reading.
CONVENTION_PUBLISHED = "published"
CONVENTION_INCREMENTAL = "incremental"

PLAN_PROCEED = "proceed"
PLAN_DESCEND = "descend"
PLAN_CANCEL = "cancel"

DEFAULT_LINE_ITEMS_CENTS: dict[str, int] = {
    "fuel": 300000,
    "crew": 64000,
    "airport_origin": 108900,
    "airport_destination": 100500,
    "tax": 1560,
    "aircraft": 178300,
    "ground_personnel": 400000,
    "insurance": 28800,
}


def round_cents(amount: float) -> int:
    """Round a non-negative cent amount half-up to the nearest integer cent."""
    return int(math.floor(amount + 0.5))


@dataclass(frozen=True)
class FlightCostConfig:
    """Cost line items (integer cents), the fare, and the seat count."""

    line_items: dict[str, int] = field(
        default_factory=lambda: dict(DEFAULT_LINE_ITEMS_CENTS)
    )
    fare_cents: int = 17500
    seats: int = 144

    def __post_init__(self) -> None:
        for name, amount in self.line_items.items():
            if not isinstance(amount, int) or isinstance(amount, bool):
                raise ConfigError(f"cost.line_items.{name}: amount must be integer cents")
            if amount < 0:
                raise ConfigError(f"cost.line_items.{name}: amount must be >= 0")
        if self.fare_cents < 0:
            raise ConfigError("cost.fare: must be >= 0")
        if self.seats < 0:
            raise ConfigError("cost.seats: must be >= 0")

    @property
    def fuel_cents(self) -> int:
        return self.line_items.get("fuel", 0)


DEFAULT_COST_CONFIG = FlightCostConfig()


@dataclass(frozen=True)
class MitigationPlan:
    """One mitigation option: proceed as filed, descend, or cancel."""

    kind: str
    altitude_km: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in (PLAN_PROCEED, PLAN_DESCEND, PLAN_CANCEL):
            raise ConfigError(f"unknown plan kind {self.kind!r}")
        if self.kind == PLAN_DESCEND and self.altitude_km is None:
            raise ConfigError("descend plan requires altitude_km")
        if self.kind != PLAN_DESCEND and self.altitude_km is not None:
            raise ConfigError(f"{self.kind} plan must not carry an altitude")

    @classmethod
    def proceed(cls) -> "MitigationPlan":
        return cls(PLAN_PROCEED)

    @classmethod
    def descend(cls, altitude_km: float) -> "MitigationPlan":
        return cls(PLAN_DESCEND, altitude_km)

    @classmethod
    def cancel(cls) -> "MitigationPlan":
        return cls(PLAN_CANCEL)


def operating_cost_total(config: FlightCostConfig) -> int:
    """Exact sum of the operating line items, in cents.

    Reported for context and for user-defined severity models; mitigation
    losses deliberately exclude it.
    """
    return sum(config.line_items.values())


def cancellation_loss(config: FlightCostConfig) -> int:
    """Net sales lost by cancelling: fare x seats, in cents."""
    return config.fare_cents * config.seats


def altitude_change_loss(
    config: FlightCostConfig,
    multiplier: float,
    convention: str = CONVENTION_PUBLISHED,
) -> int:
    """Loss (cents) of flying with the given fuel multiplier.

    published: fuel x multiplier.  incremental: fuel x (multiplier - 1).
    """
    if multiplier < 1:
        raise DomainError(f"fuel multiplier must be >= 1, got {multiplier}")
    if convention == CONVENTION_PUBLISHED:
        return round_cents(config.fuel_cents * multiplier)
    if convention == CONVENTION_INCREMENTAL:
        return round_cents(config.fuel_cents * (multiplier - 1.0))
    raise ValueError(f"unknown loss convention {convention!r}")


def plan_loss(
    plan: MitigationPlan,
    config: FlightCostConfig,
    table: AltitudeDepthTable | None = None,
    convention: str = CONVENTION_PUBLISHED,
) -> int:
    """Loss (cents) of executing a mitigation plan.

    Descend losses pair the published convention with 2-decimal multipliers
    so the printed figures reproduce exactly; the incremental convention
    uses exact multipliers.
    """
    table = table or DEFAULT_TABLE
    if plan.kind == PLAN_PROCEED:
        return 0
    if plan.kind == PLAN_CANCEL:
        return cancellation_loss(config)
    assert plan.altitude_km is not None
    if not plan.altitude_km < table.reference_altitude_km:
        raise DomainError(
            f"descend altitude {plan.altitude_km} km must lie strictly below "
            f"the reference altitude {table.reference_altitude_km} km"
        )
    mode = MULTIPLIER_PUBLISHED if convention == CONVENTION_PUBLISHED else MULTIPLIER_EXACT
    multiplier = fuel_multiplier(table, plan.altitude_km, mode)
    return altitude_change_loss(config, multiplier, convention)

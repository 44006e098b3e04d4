"""Flare scenario catalog, exceedance-frequency model, and event sampling.

Scenarios describe solar proton event classes by mean recurrence and either
a reference dose (measured at the 234 g/cm2 cruise depth) or a flare energy
in erg.  The frequency model maps X-class magnitude to annual exceedance
probability through three calibration points and log-log interpolation.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DomainError

SUNSPOT_FRACTION_NORMAL = 0.0005
SUNSPOT_FRACTION_ACTIVE = 0.003

# First-reported annual probability for an X13-class event; 0.25 is the
# alternate reading, selectable by overriding the frequency points.
X13_ANNUAL_PROBABILITY = 0.4
X13_ANNUAL_PROBABILITY_ALTERNATE = 0.25

DEFAULT_FREQUENCY_POINTS: tuple[tuple[float, float], ...] = (
    (13.0, X13_ANNUAL_PROBABILITY),
    (45.0, 0.006),
    (1001.0, 0.0007),
)

INTERP_PIECEWISE = "piecewise-loglog"
INTERP_POWERLAW = "least-squares-powerlaw"


@dataclass(frozen=True)
class FlareScenario:
    """One named event class in the catalog.

    ``recurrence_years`` is the mean interval between events; ``math.inf``
    marks dose-study scenarios with no assigned rate (they sample zero
    events and price at zero frequency).  At least one of
    ``reference_dose_sv`` / ``energy_erg`` must be present before the
    scenario can be used for dose computation.
    """

    id: str
    label: str
    recurrence_years: float
    sunspot_area_fraction: float | None = None
    energy_erg: float | None = None
    reference_dose_sv: float | None = None
    x_magnitude: float | None = None

    def __post_init__(self) -> None:
        if not self.id:
            raise ConfigError("scenario id must be non-empty")
        if not self.recurrence_years > 0:
            raise ConfigError(f"scenario {self.id}: recurrence_years must be > 0")
        if self.energy_erg is not None and self.energy_erg < 0:
            raise ConfigError(f"scenario {self.id}: energy_erg must be >= 0")
        if self.reference_dose_sv is not None and self.reference_dose_sv < 0:
            raise ConfigError(f"scenario {self.id}: reference_dose_sv must be >= 0")
        if self.x_magnitude is not None and not self.x_magnitude > 0:
            raise ConfigError(f"scenario {self.id}: x_magnitude must be > 0")

    @property
    def annual_rate(self) -> float:
        """Mean events per year (0 for unrated scenarios)."""
        return 0.0 if math.isinf(self.recurrence_years) else 1.0 / self.recurrence_years


@dataclass(frozen=True)
class GleRecord:
    """A historical ground level enhancement with its X-class magnitude."""

    id: str
    year: int
    x_magnitude: float

    def __post_init__(self) -> None:
        if not self.x_magnitude > 0:
            raise ConfigError(f"{self.id}: x_magnitude must be > 0")


# The two events that calibrate the magnitude scale: GLE43 sets the X13
# point, and the Miyake event is taken as 141x GLE69's X7.1.
CALIBRATION_GLE_RECORDS = (
    GleRecord("GLE43", 1989, 13.0),
    GleRecord("GLE69", 2005, 7.1),
)


def builtin_scenarios() -> tuple[FlareScenario, ...]:
    """The built-in scenario catalog.

    Recurrence-classed scenarios come in normal-sun / active-sun pairs.
    Only decadal-active carries a built-in reference dose; doses for the
    remaining recurrence classes are config-supplied inputs.  Historical
    extremes (carrington, miyake) carry magnitudes only, and their
    recurrences are the reciprocals of the catalog probabilities.
    """
    return (
        FlareScenario(
            id="tenth-year-normal",
            label="Tenth-year maximum flare, normal sun",
            recurrence_years=0.1,
            sunspot_area_fraction=SUNSPOT_FRACTION_NORMAL,
        ),
        FlareScenario(
            id="tenth-year-active",
            label="Tenth-year maximum flare, active sun",
            recurrence_years=0.1,
            sunspot_area_fraction=SUNSPOT_FRACTION_ACTIVE,
        ),
        FlareScenario(
            id="annual-normal",
            label="Annual maximum flare, normal sun",
            recurrence_years=1.0,
            sunspot_area_fraction=SUNSPOT_FRACTION_NORMAL,
        ),
        FlareScenario(
            id="annual-active",
            label="Annual maximum flare, active sun",
            recurrence_years=1.0,
            sunspot_area_fraction=SUNSPOT_FRACTION_ACTIVE,
        ),
        FlareScenario(
            id="decadal-normal",
            label="Decadal maximum flare, normal sun",
            recurrence_years=10.0,
            sunspot_area_fraction=SUNSPOT_FRACTION_NORMAL,
        ),
        FlareScenario(
            id="decadal-active",
            label="Decadal maximum flare, active sun",
            recurrence_years=10.0,
            sunspot_area_fraction=SUNSPOT_FRACTION_ACTIVE,
            reference_dose_sv=1.2e-3,
        ),
        FlareScenario(
            id="spot-max-active",
            label="Spot maximum flare, active sun",
            recurrence_years=math.inf,
            sunspot_area_fraction=SUNSPOT_FRACTION_ACTIVE,
            energy_erg=3.64e33,
        ),
        FlareScenario(
            id="pmf",
            label="Possible maximum flare (20% spot coverage)",
            recurrence_years=math.inf,
            sunspot_area_fraction=0.2,
            energy_erg=1.98e36,
            reference_dose_sv=0.5,
        ),
        FlareScenario(
            id="carrington",
            label="Carrington-class event (~160 yr)",
            recurrence_years=1.0 / 0.006,
            x_magnitude=45.0,
        ),
        FlareScenario(
            id="miyake",
            label="Miyake-class event (~1300 yr)",
            recurrence_years=1.0 / 0.0007,
            x_magnitude=1001.0,
        ),
    )


@dataclass(frozen=True)
class FrequencyCatalog:
    """Annual exceedance probability vs X-class magnitude.

    Points must strictly increase in magnitude and strictly decrease in
    probability, with every probability in (0, 1].  ``piecewise-loglog``
    interpolates log10(P) linearly against log10(x) segment by segment and
    is exact at the points; ``least-squares-powerlaw`` fits one power law
    through all points for sensitivity studies (not exact anywhere).
    """

    points: tuple[tuple[float, float], ...] = DEFAULT_FREQUENCY_POINTS
    interpolation_mode: str = INTERP_PIECEWISE

    def __post_init__(self) -> None:
        points = tuple((float(x), float(p)) for x, p in self.points)
        object.__setattr__(self, "points", points)
        if len(points) < 2:
            raise ConfigError("frequency catalog needs at least 2 points")
        for (x1, p1), (x2, p2) in zip(points, points[1:]):
            if not x2 > x1:
                raise ConfigError(f"frequency magnitudes must strictly increase: {x1} then {x2}")
            if not p2 < p1:
                raise ConfigError(f"frequency probabilities must strictly decrease: {p1} then {p2}")
        for x, p in points:
            if not x > 0:
                raise ConfigError(f"frequency magnitude must be > 0, got {x}")
            if not 0 < p <= 1:
                raise ConfigError(f"frequency probability must be in (0, 1], got {p}")
        if self.interpolation_mode not in (INTERP_PIECEWISE, INTERP_POWERLAW):
            raise ConfigError(f"unknown interpolation mode {self.interpolation_mode!r}")

    def powerlaw_coefficients(self) -> tuple[float, float]:
        """(intercept, slope) of the least-squares fit log10 P = a + b log10 x."""
        lx = np.log10([x for x, _ in self.points])
        lp = np.log10([p for _, p in self.points])
        slope, intercept = np.polyfit(lx, lp, 1)
        return float(intercept), float(slope)


DEFAULT_FREQUENCY_CATALOG = FrequencyCatalog()


def annual_exceedance_probability(catalog: FrequencyCatalog, x: float) -> float:
    """Probability per year of an event at least as large as X-class ``x``.

    Piecewise mode returns catalog probabilities exactly at catalog
    magnitudes and extrapolates beyond the range with the nearest segment's
    log-log slope.  Results are clamped to (0, 1].
    """
    if not x > 0:
        raise DomainError(f"magnitude must be > 0, got {x}")
    points = catalog.points
    if catalog.interpolation_mode == INTERP_POWERLAW:
        a, b = catalog.powerlaw_coefficients()
        return min(10.0 ** (a + b * math.log10(x)), 1.0)
    for xi, pi in points:
        if x == xi:
            return pi
    lx = math.log10(x)
    # Pick the bracketing segment, or the nearest one beyond the range.
    if x < points[0][0]:
        seg = (points[0], points[1])
    elif x > points[-1][0]:
        seg = (points[-2], points[-1])
    else:
        seg = next(
            ((x1, p1), (x2, p2))
            for (x1, p1), (x2, p2) in zip(points, points[1:])
            if x1 < x < x2
        )
    (x1, p1), (x2, p2) = seg
    slope = (math.log10(p2) - math.log10(p1)) / (math.log10(x2) - math.log10(x1))
    logp = math.log10(p1) + (lx - math.log10(x1)) * slope
    return min(10.0**logp, 1.0)


def return_period(catalog: FrequencyCatalog, x: float) -> float:
    """Mean years between events exceeding magnitude ``x`` (1 / probability)."""
    return 1.0 / annual_exceedance_probability(catalog, x)


def magnitude_at_probability(catalog: FrequencyCatalog, p: float) -> float:
    """X-class magnitude whose annual exceedance probability equals ``p``.

    Inverse of :func:`annual_exceedance_probability`; exact at catalog
    points, otherwise solved on the log-log segment (or its extrapolation).
    """
    if not 0 < p <= 1:
        raise DomainError(f"probability must be in (0, 1], got {p}")
    points = catalog.points
    if catalog.interpolation_mode == INTERP_POWERLAW:
        a, b = catalog.powerlaw_coefficients()
        return 10.0 ** ((math.log10(p) - a) / b)
    for xi, pi in points:
        if p == pi:
            return xi
    # Probabilities decrease along the point list.
    if p > points[0][1]:
        seg = (points[0], points[1])
    elif p < points[-1][1]:
        seg = (points[-2], points[-1])
    else:
        seg = next(
            ((x1, p1), (x2, p2))
            for (x1, p1), (x2, p2) in zip(points, points[1:])
            if p2 < p < p1
        )
    (x1, p1), (x2, p2) = seg
    slope = (math.log10(p2) - math.log10(p1)) / (math.log10(x2) - math.log10(x1))
    logx = math.log10(x1) + (math.log10(p) - math.log10(p1)) / slope
    return 10.0**logx


def _stream_key(scenario_id: str) -> int:
    """Stable per-scenario entropy word, independent of process hash seed."""
    digest = hashlib.blake2b(scenario_id.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def sample_years(
    scenarios: list[FlareScenario] | tuple[FlareScenario, ...],
    n_years: int,
    seed: int,
) -> dict[str, np.ndarray]:
    """Poisson event counts per simulated year, one stream per scenario.

    Each scenario draws from its own generator keyed on (seed, scenario id),
    so streams are independent, reproducible, and unaffected by the order
    scenarios are listed.  Returns a mapping id -> integer counts of shape
    (n_years,).
    """
    if n_years < 1:
        raise DomainError(f"n_years must be >= 1, got {n_years}")
    ids = [s.id for s in scenarios]
    if len(set(ids)) != len(ids):
        raise ConfigError("duplicate scenario ids in sampling request")
    out: dict[str, np.ndarray] = {}
    for scenario in scenarios:
        rng = np.random.default_rng([seed, _stream_key(scenario.id)])
        out[scenario.id] = rng.poisson(scenario.annual_rate, size=n_years)
    return out

"""Altitude to overhead atmospheric depth conversion and fuel-cost multipliers.

The default table carries four anchors: normal cruise at 12 km under
234 g/cm2 of air, the two alternative flight levels at 9.5 km (365 g/cm2)
and 7 km (484 g/cm2), and the surface (1037 g/cm2).  Depth varies linearly
with altitude between anchors, which keeps the conversion exactly invertible.

Fuel burn is modeled as proportional to overhead depth, so the cost
multiplier for flying below the reference altitude is a plain depth ratio.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError, DomainError

DEFAULT_ANCHORS: tuple[tuple[float, float], ...] = (
    (12.0, 234.0),
    (9.5, 365.0),
    (7.0, 484.0),
    (0.0, 1037.0),
)

# Some tabulations put normal cruise under 243 g/cm2 instead of 234.  The
# default stays at 234 because it reproduces the 1.56 / 2.07 fuel multipliers
# exactly; pass custom anchors to use 243.
ALTERNATE_CRUISE_DEPTH_GCM2 = 243.0

MULTIPLIER_EXACT = "exact"
MULTIPLIER_PUBLISHED = "published"  # depth ratio rounded to 2 decimal places


@dataclass(frozen=True)
class AltitudeDepthTable:
    """Ordered (altitude_km, depth_gcm2) anchors, altitude strictly decreasing.

    Attributes:
        anchors: Conversion anchors, highest altitude first.  Depth must
            strictly increase as altitude decreases.
        reference_altitude_km: Cruise altitude whose depth normalizes the
            fuel multiplier.
    """

    anchors: tuple[tuple[float, float], ...] = DEFAULT_ANCHORS
    reference_altitude_km: float = 12.0

    def __post_init__(self) -> None:
        anchors = tuple((float(a), float(d)) for a, d in self.anchors)
        object.__setattr__(self, "anchors", anchors)
        if len(anchors) < 2:
            raise ConfigError("altitude table needs at least 2 anchors")
        for (a1, d1), (a2, d2) in zip(anchors, anchors[1:]):
            if not a2 < a1:
                raise ConfigError(
                    f"altitude anchors must strictly decrease: {a1} then {a2}"
                )
            if not d2 > d1:
                raise ConfigError(
                    f"depth anchors must strictly increase: {d1} then {d2}"
                )
        if not (self.min_altitude_km <= self.reference_altitude_km <= self.max_altitude_km):
            raise ConfigError(
                f"reference altitude {self.reference_altitude_km} km outside table domain"
            )

    @property
    def max_altitude_km(self) -> float:
        return self.anchors[0][0]

    @property
    def min_altitude_km(self) -> float:
        return self.anchors[-1][0]

    @property
    def min_depth_gcm2(self) -> float:
        return self.anchors[0][1]

    @property
    def max_depth_gcm2(self) -> float:
        return self.anchors[-1][1]


DEFAULT_TABLE = AltitudeDepthTable()


def depth_at_altitude(table: AltitudeDepthTable, altitude_km: float) -> float:
    """Overhead atmospheric depth (g/cm2) at an altitude inside the table domain.

    Piecewise linear in altitude; returns anchor depths exactly at anchor
    altitudes.  Altitudes above the table ceiling or below its floor raise
    DomainError: no anchor exists above normal cruise, so extrapolation is
    refused rather than guessed.
    """
    anchors = table.anchors
    if not (table.min_altitude_km <= altitude_km <= table.max_altitude_km):
        raise DomainError(
            f"altitude {altitude_km} km outside table domain "
            f"[{table.min_altitude_km}, {table.max_altitude_km}] km"
        )
    for alt, depth in anchors:
        if altitude_km == alt:
            return depth
    for (a1, d1), (a2, d2) in zip(anchors, anchors[1:]):
        if a2 < altitude_km < a1:
            return d1 + (a1 - altitude_km) * (d2 - d1) / (a1 - a2)
    raise DomainError(f"altitude {altitude_km} km not bracketed by table anchors")


def altitude_at_depth(table: AltitudeDepthTable, depth_gcm2: float) -> float:
    """Altitude (km) whose overhead depth equals ``depth_gcm2``.

    Exact inverse of :func:`depth_at_altitude` on the anchor range.
    """
    anchors = table.anchors
    if not (table.min_depth_gcm2 <= depth_gcm2 <= table.max_depth_gcm2):
        raise DomainError(
            f"depth {depth_gcm2} g/cm2 outside table range "
            f"[{table.min_depth_gcm2}, {table.max_depth_gcm2}] g/cm2"
        )
    for alt, depth in anchors:
        if depth_gcm2 == depth:
            return alt
    for (a1, d1), (a2, d2) in zip(anchors, anchors[1:]):
        if d1 < depth_gcm2 < d2:
            return a1 - (depth_gcm2 - d1) * (a1 - a2) / (d2 - d1)
    raise DomainError(f"depth {depth_gcm2} g/cm2 not bracketed by table anchors")


def fuel_multiplier(
    table: AltitudeDepthTable,
    altitude_km: float,
    mode: str = MULTIPLIER_EXACT,
) -> float:
    """Fuel-cost multiplier for cruising at ``altitude_km``.

    The multiplier is depth(altitude) / depth(reference altitude), i.e. fuel
    burn scales with the overhead air mass.  ``published`` mode rounds the
    ratio to 2 decimal places (1.56 at 9.5 km and 2.07 at 7 km with the
    default table); ``exact`` mode returns the raw ratio.
    """
    ratio = depth_at_altitude(table, altitude_km) / depth_at_altitude(
        table, table.reference_altitude_km
    )
    if mode == MULTIPLIER_EXACT:
        return ratio
    if mode == MULTIPLIER_PUBLISHED:
        return round(ratio, 2)
    raise ValueError(f"unknown multiplier mode {mode!r}")

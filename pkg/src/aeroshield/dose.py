"""Dose-vs-depth attenuation profiles, energy scaling, and limit policies.

An event's dose falls off with atmospheric depth along a piecewise
exponential curve: between anchors, ln(dose) is linear in depth, and beyond
the deepest anchor the last segment's log-slope extends the curve.  A single
built-in shape (the decadal active-sun event) carries the numeric anchors;
every other event reuses that shape rescaled to its own reference dose at
234 g/cm2, or to a dose proportional to its flare energy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

from .atmosphere import AltitudeDepthTable, DEFAULT_TABLE, depth_at_altitude
from .errors import ConfigError, DomainError
from .flares import FlareScenario

DOSE_MODE_ANCHOR = "anchor"
# Energy mode assumes dose scales linearly with flare energy.  That premise
# is approximate: the built-in reference doses embed spectrum effects the
# linear model cannot reproduce, so anchor mode is the default wherever a
# reference dose exists.
DOSE_MODE_ENERGY = "energy"


@dataclass(frozen=True)
class DoseDepthProfile:
    """Ordered (depth g/cm2, dose Sv) anchors of a monotone attenuation curve."""

    event_label: str
    anchors: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        anchors = tuple((float(d), float(y)) for d, y in self.anchors)
        object.__setattr__(self, "anchors", anchors)
        if len(anchors) < 2:
            raise ConfigError(f"profile {self.event_label!r} needs at least 2 anchors")
        for d, y in anchors:
            if not y > 0:
                raise ConfigError(f"profile {self.event_label!r}: doses must be > 0, got {y}")
        for (d1, y1), (d2, y2) in zip(anchors, anchors[1:]):
            if not d2 > d1:
                raise ConfigError(
                    f"profile {self.event_label!r}: depths must strictly increase ({d1} then {d2})"
                )
            if not y2 < y1:
                raise ConfigError(
                    f"profile {self.event_label!r}: doses must strictly decrease ({y1} then {y2})"
                )

    @property
    def min_depth_gcm2(self) -> float:
        return self.anchors[0][0]

    @property
    def max_anchor_depth_gcm2(self) -> float:
        return self.anchors[-1][0]

    @property
    def reference_dose_sv(self) -> float:
        """Dose at the shallowest anchor (the curve maximum)."""
        return self.anchors[0][1]


DECADAL_ACTIVE_PROFILE = DoseDepthProfile(
    event_label="decadal-active",
    anchors=((234.0, 1.2e-3), (365.0, 4.5e-4), (484.0, 1.2e-4)),
)

DEFAULT_PROFILES: dict[str, DoseDepthProfile] = {
    DECADAL_ACTIVE_PROFILE.event_label: DECADAL_ACTIVE_PROFILE,
}


class DoseBand(IntEnum):
    """Severity band of a dose against the limit policy, lowest first."""

    BELOW_PUBLIC = 0
    EXCEEDS_PUBLIC = 1
    EXCEEDS_OCCUPATIONAL = 2
    EXCEEDS_DETERMINISTIC = 3
    FATAL = 4

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")


@dataclass(frozen=True)
class DoseLimitPolicy:
    """Regulatory dose thresholds in Sv.

    Defaults: 1 mSv public, 20 mSv occupational, 100 mSv deterministic
    effects, 10 Sv fatal.  ``background_annual_sv`` (2.4 mSv/yr) is
    informational context only and never gates a decision.
    """

    public_limit_sv: float = 1e-3
    occupational_limit_sv: float = 2e-2
    deterministic_limit_sv: float = 1e-1
    fatal_dose_sv: float = 10.0
    background_annual_sv: float = 2.4e-3

    def __post_init__(self) -> None:
        ordered = (
            self.public_limit_sv,
            self.occupational_limit_sv,
            self.deterministic_limit_sv,
            self.fatal_dose_sv,
        )
        if not all(a > 0 for a in ordered):
            raise ConfigError("policy limits must be positive")
        if not (ordered[0] < ordered[1] < ordered[2] < ordered[3]):
            raise ConfigError(
                "policy limits must satisfy public < occupational < deterministic < fatal"
            )

    def limit_for(self, preset: str) -> float:
        """Threshold in Sv for a named preset (public/occupational/deterministic)."""
        limits = {
            "public": self.public_limit_sv,
            "occupational": self.occupational_limit_sv,
            "deterministic": self.deterministic_limit_sv,
        }
        if preset not in limits:
            raise DomainError(f"unknown policy preset {preset!r}")
        return limits[preset]


DEFAULT_POLICY = DoseLimitPolicy()


@dataclass(frozen=True)
class EnergyScaling:
    """Linear energy-to-dose calibration at the 234 g/cm2 reference depth.

    kappa is fixed by the possible-maximum-flare pair (0.5 Sv at
    1.98e36 erg); the shape profile supplies the depth dependence.
    """

    kappa_sv_per_erg: float = 0.5 / 1.98e36
    reference_energy_erg: float = 1.98e36
    shape_profile: DoseDepthProfile = DECADAL_ACTIVE_PROFILE

    def __post_init__(self) -> None:
        if not self.kappa_sv_per_erg > 0:
            raise ConfigError("kappa_sv_per_erg must be > 0")
        if not self.reference_energy_erg > 0:
            raise ConfigError("reference_energy_erg must be > 0")


DEFAULT_SCALING = EnergyScaling()


def dose_at_depth(profile: DoseDepthProfile, depth_gcm2: float) -> float:
    """Event dose (Sv) at an atmospheric depth on the profile curve.

    Exact at anchors.  Between anchors ln(dose) interpolates linearly in
    depth; past the deepest anchor the last segment's log-slope
    extrapolates (surface doses come from this branch).  Depths shallower
    than the first anchor are above the validated flight band and raise
    DomainError.
    """
    anchors = profile.anchors
    if depth_gcm2 < anchors[0][0]:
        raise DomainError(
            f"depth {depth_gcm2} g/cm2 above profile ceiling ({anchors[0][0]} g/cm2)"
        )
    for d, y in anchors:
        if depth_gcm2 == d:
            return y
    if depth_gcm2 > anchors[-1][0]:
        (d1, y1), (d2, y2) = anchors[-2], anchors[-1]
    else:
        (d1, y1), (d2, y2) = next(
            (lo, hi)
            for lo, hi in zip(anchors, anchors[1:])
            if lo[0] < depth_gcm2 < hi[0]
        )
    slope = (math.log(y2) - math.log(y1)) / (d2 - d1)
    return math.exp(math.log(y1) + (depth_gcm2 - d1) * slope)


def is_extrapolated_depth(profile: DoseDepthProfile, depth_gcm2: float) -> bool:
    """True when the dose at this depth extends past the deepest anchor."""
    return depth_gcm2 > profile.max_anchor_depth_gcm2


def scale_to_reference(profile: DoseDepthProfile, reference_dose_sv: float) -> DoseDepthProfile:
    """Rescale a profile so its shallowest-anchor dose equals ``reference_dose_sv``.

    The attenuation shape (all dose ratios) is preserved.  A reference equal
    to the existing first-anchor dose returns the profile unchanged, and the
    first anchor of a rescaled profile carries the reference bit-for-bit.
    """
    if not reference_dose_sv > 0:
        raise DomainError(f"reference dose must be > 0, got {reference_dose_sv}")
    factor = reference_dose_sv / profile.reference_dose_sv
    if factor == 1.0:
        return profile
    first = profile.anchors[0]
    anchors = ((first[0], reference_dose_sv),) + tuple(
        (d, y * factor) for d, y in profile.anchors[1:]
    )
    return DoseDepthProfile(event_label=profile.event_label, anchors=anchors)


def dose_for_energy(
    scaling: EnergyScaling,
    energy_erg: float,
    depth_gcm2: float,
) -> float:
    """Dose (Sv) at depth for a flare of the given energy, exactly linear in energy.

    dose = (kappa * energy) * shape(depth) / shape(reference depth), where
    the shape's reference depth is its shallowest anchor.
    """
    if energy_erg < 0:
        raise DomainError(f"energy must be >= 0, got {energy_erg}")
    if energy_erg == 0:
        return 0.0
    shape = scaling.shape_profile
    ratio = dose_at_depth(shape, depth_gcm2) / shape.reference_dose_sv
    return (scaling.kappa_sv_per_erg * energy_erg) * ratio


def event_profile(
    scenario: FlareScenario,
    mode: str = DOSE_MODE_ANCHOR,
    shape: DoseDepthProfile | None = None,
    scaling: EnergyScaling | None = None,
) -> DoseDepthProfile | None:
    """Attenuation profile for a scenario, or None when its dose is zero.

    Anchor mode rescales the shape to the scenario's reference dose; energy
    mode rescales it to kappa * energy.  Raises ConfigError when the field
    required by the mode is missing.
    """
    shape = shape or DECADAL_ACTIVE_PROFILE
    scaling = scaling or DEFAULT_SCALING
    if mode == DOSE_MODE_ANCHOR:
        if scenario.reference_dose_sv is None:
            raise ConfigError(
                f"scenario {scenario.id!r} has no reference_dose_sv; "
                "supply one in config or use energy mode"
            )
        if scenario.reference_dose_sv == 0:
            return None
        return scale_to_reference(shape, scenario.reference_dose_sv)
    if mode == DOSE_MODE_ENERGY:
        if scenario.energy_erg is None:
            raise ConfigError(f"scenario {scenario.id!r} has no energy_erg for energy mode")
        if scenario.energy_erg == 0:
            return None
        return scale_to_reference(
            shape, scaling.kappa_sv_per_erg * scenario.energy_erg
        )
    raise ValueError(f"unknown dose mode {mode!r}")


def dose_for_event(
    scenario: FlareScenario,
    altitude_km: float,
    mode: str = DOSE_MODE_ANCHOR,
    table: AltitudeDepthTable | None = None,
    shape: DoseDepthProfile | None = None,
    scaling: EnergyScaling | None = None,
) -> float:
    """Event dose (Sv) for a scenario at a flight altitude.

    Converts altitude to depth through the table, then evaluates the
    scenario's scaled profile (anchor mode) or the linear energy model.
    """
    table = table or DEFAULT_TABLE
    depth = depth_at_altitude(table, altitude_km)
    if mode == DOSE_MODE_ENERGY:
        scaling = scaling or DEFAULT_SCALING
        if shape is not None:
            scaling = EnergyScaling(
                kappa_sv_per_erg=scaling.kappa_sv_per_erg,
                reference_energy_erg=scaling.reference_energy_erg,
                shape_profile=shape,
            )
        if scenario.energy_erg is None:
            raise ConfigError(f"scenario {scenario.id!r} has no energy_erg for energy mode")
        return dose_for_energy(scaling, scenario.energy_erg, depth)
    profile = event_profile(scenario, mode, shape=shape, scaling=scaling)
    if profile is None:
        return 0.0
    return dose_at_depth(profile, depth)


def classify_dose(dose_sv: float, policy: DoseLimitPolicy | None = None) -> DoseBand:
    """Severity band for a dose; thresholds are inclusive (dose == limit exceeds it)."""
    if dose_sv < 0:
        raise DomainError(f"dose must be >= 0, got {dose_sv}")
    policy = policy or DEFAULT_POLICY
    if dose_sv >= policy.fatal_dose_sv:
        return DoseBand.FATAL
    if dose_sv >= policy.deterministic_limit_sv:
        return DoseBand.EXCEEDS_DETERMINISTIC
    if dose_sv >= policy.occupational_limit_sv:
        return DoseBand.EXCEEDS_OCCUPATIONAL
    if dose_sv >= policy.public_limit_sv:
        return DoseBand.EXCEEDS_PUBLIC
    return DoseBand.BELOW_PUBLIC


def depth_for_dose_limit(profile: DoseDepthProfile, limit_sv: float) -> float | None:
    """Unique depth (g/cm2) where the profile dose equals ``limit_sv``.

    Solved analytically per exponential segment; exact at anchors.  Limits
    below the deepest anchor's dose are solved on the extrapolated tail
    (the exponential tail never reaches zero, so every positive limit has a
    depth).  Returns None when the limit exceeds the curve maximum: every
    depth on the curve is already below the limit and no crossing exists.
    """
    if not limit_sv > 0:
        raise DomainError(f"limit must be > 0, got {limit_sv}")
    anchors = profile.anchors
    if limit_sv > anchors[0][1]:
        return None
    for d, y in anchors:
        if limit_sv == y:
            return d
    if limit_sv < anchors[-1][1]:
        (d1, y1), (d2, y2) = anchors[-2], anchors[-1]
    else:
        (d1, y1), (d2, y2) = next(
            (lo, hi)
            for lo, hi in zip(anchors, anchors[1:])
            if hi[1] < limit_sv < lo[1]
        )
    slope = (math.log(y2) - math.log(y1)) / (d2 - d1)
    return d1 + (math.log(limit_sv) - math.log(y1)) / slope

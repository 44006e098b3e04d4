"""Display formatting shared by the CLI, the HTTP API, and reports.

Doses travel as floats in Sv and display as mSv with 3 significant
figures; money travels as integer cents and displays as dollars with two
decimals.  Keeping the formatting here means every surface renders the
same bytes for the same value.
"""

from __future__ import annotations

import math


def format_msv(dose_sv: float) -> str:
    """Dose display string in mSv with 3 significant figures, e.g. '0.450 mSv'."""
    msv = dose_sv * 1000.0
    if msv == 0:
        return "0.00 mSv"
    exponent = math.floor(math.log10(abs(msv)))
    decimals = max(0, 2 - exponent)
    return f"{msv:.{decimals}f} mSv"


def format_usd(cents: int | float) -> str:
    """Money display string, e.g. '$4,680.00'."""
    return f"${cents / 100.0:,.2f}"


def format_altitude_km(altitude_km: float) -> str:
    """Altitude with trailing zeros trimmed, e.g. '9.5', '7', '11.535'."""
    text = f"{altitude_km:.3f}".rstrip("0").rstrip(".")
    return text if text else "0"


def plan_label(kind: str, altitude_km: float | None, reference_km: float) -> str:
    """Human label for a plan card, e.g. 'Descend 9.5 km'."""
    if kind == "proceed":
        return f"Proceed at {format_altitude_km(reference_km)} km"
    if kind == "descend":
        assert altitude_km is not None
        return f"Descend {format_altitude_km(altitude_km)} km"
    return "Cancel flight"

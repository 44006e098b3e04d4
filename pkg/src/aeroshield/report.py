"""Report rendering: delimited profile output plus matplotlib figures.

The report path writes, per scenario, the dose-depth curve as CSV and as a
log-scale figure with the policy limit lines, and the event-frequency curve
as CSV and a log-log figure.  Figures render to files with the Agg backend,
so reports work headless.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .atmosphere import depth_at_altitude
from .engine import Engine

PROFILE_CSV_COLUMNS = ("depth_gcm2", "altitude_km", "dose_sv")
EXCEEDANCE_CSV_COLUMNS = ("x_magnitude", "annual_probability")


def write_profile_csv(engine: Engine, scenario_id: str, path: Path, points: int = 25) -> Path:
    rows = engine.profile_rows(scenario_id, points)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(PROFILE_CSV_COLUMNS)
        for row in rows:
            writer.writerow([row[c] for c in PROFILE_CSV_COLUMNS])
    return path


def render_profile_figure(
    engine: Engine, scenario_id: str, path: Path, points: int = 200
) -> Path:
    """Dose vs depth on a log scale with the three policy limit lines."""
    cfg = engine.config
    rows = engine.profile_rows(scenario_id, points)
    depths = [r["depth_gcm2"] for r in rows]
    doses = [r["dose_sv"] for r in rows]
    scenario = cfg.scenario(scenario_id)

    fig, ax = plt.subplots(figsize=(7, 5))
    ax.plot(depths, doses, color="tab:blue", lw=1.8, label=scenario.label)
    anchor_depths = {d for d, _ in cfg.shape_profile.anchors}
    anchor_rows = [r for r in rows if r["depth_gcm2"] in anchor_depths]
    ax.plot(
        [r["depth_gcm2"] for r in anchor_rows],
        [r["dose_sv"] for r in anchor_rows],
        "o", color="tab:blue", ms=5,
    )

    limits = (
        (cfg.policy.public_limit_sv, "public limit"),
        (cfg.policy.occupational_limit_sv, "occupational limit"),
        (cfg.policy.deterministic_limit_sv, "deterministic limit"),
    )
    for value, name in limits:
        ax.axhline(value, color="tab:red", lw=0.9, ls="--", alpha=0.7)
        ax.annotate(
            name, (depths[-1], value), textcoords="offset points",
            xytext=(-4, 3), ha="right", fontsize=8, color="tab:red",
        )
    table = cfg.atmosphere
    for alt_km in (table.reference_altitude_km, 9.5, 7.0):
        if not table.min_altitude_km <= alt_km <= table.max_altitude_km:
            continue
        d = depth_at_altitude(table, alt_km)
        ax.axvline(d, color="gray", lw=0.8, ls=":", alpha=0.8)
        ax.annotate(
            f"{alt_km:g} km", (d, min(doses)), textcoords="offset points",
            xytext=(3, 6), fontsize=8, color="gray",
        )

    ax.set_yscale("log")
    ax.set_xlabel("atmospheric depth (g/cm$^2$)")
    ax.set_ylabel("event dose (Sv)")
    ax.set_title(f"Dose attenuation: {scenario.label}")
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _exceedance_grid(engine: Engine, n: int = 120) -> list[float]:
    points = engine.config.frequency.points
    lo, hi = points[0][0], points[-1][0]
    return np.geomspace(lo, hi, n).tolist()


def write_exceedance_csv(engine: Engine, path: Path) -> Path:
    grid = sorted(set(_exceedance_grid(engine)) | {x for x, _ in engine.config.frequency.points})
    rows = engine.exceedance_rows(grid)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(EXCEEDANCE_CSV_COLUMNS)
        for row in rows:
            writer.writerow([row[c] for c in EXCEEDANCE_CSV_COLUMNS])
    return path


def render_exceedance_figure(engine: Engine, path: Path) -> Path:
    """Annual exceedance probability vs X-class magnitude, log-log."""
    grid = _exceedance_grid(engine)
    rows = engine.exceedance_rows(grid)
    points = engine.config.frequency.points

    fig, ax = plt.subplots(figsize=(7, 5))
    ax.plot(
        [r["x_magnitude"] for r in rows],
        [r["annual_probability"] for r in rows],
        color="tab:orange", lw=1.8,
    )
    ax.plot([x for x, _ in points], [p for _, p in points], "s", color="tab:orange", ms=6)
    for x, p in points:
        ax.annotate(f"X{x:g}", (x, p), textcoords="offset points", xytext=(5, 4), fontsize=8)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("X-class magnitude")
    ax.set_ylabel("annual exceedance probability (1/yr)")
    ax.set_title("Event frequency model")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_report(
    engine: Engine,
    scenario_id: str,
    out_dir: str | Path,
    points: int = 25,
) -> list[Path]:
    """Write the full report bundle for one scenario; returns the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return [
        write_profile_csv(engine, scenario_id, out / f"{scenario_id}-profile.csv", points),
        render_profile_figure(engine, scenario_id, out / f"{scenario_id}-profile.png"),
        write_exceedance_csv(engine, out / "exceedance.csv"),
        render_exceedance_figure(engine, out / "exceedance.png"),
    ]

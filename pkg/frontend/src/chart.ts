// SVG geometry for the dose-vs-depth chart: linear depth on x, log dose
// on y, dashed lines at the policy limits, dotted markers at the three
// reference altitudes. Pure functions over response data; the DOM layer
// only assembles the returned primitives.

import type { Policy, ProfileRow } from "./types.js";

export interface ChartBox {
  width: number;
  height: number;
  padLeft: number;
  padRight: number;
  padTop: number;
  padBottom: number;
}

export const DEFAULT_BOX: ChartBox = {
  width: 640,
  height: 360,
  padLeft: 64,
  padRight: 16,
  padTop: 12,
  padBottom: 36,
};

export interface LimitLine {
  y: number;
  label: string;
  dose_sv: number;
}

export interface AltitudeMarker {
  x: number;
  label: string;
  depth_gcm2: number;
}

export interface DoseChart {
  path: string;
  points: { x: number; y: number; row: ProfileRow }[];
  limitLines: LimitLine[];
  markers: AltitudeMarker[];
  xScale: (depth: number) => number;
  yScale: (doseSv: number) => number;
}

function log10(v: number): number {
  return Math.log(v) / Math.LN10;
}

/** Build the chart geometry for one profile. Rows must be non-empty. */
export function doseChart(
  rows: ProfileRow[],
  policy: Policy,
  box: ChartBox = DEFAULT_BOX,
): DoseChart {
  if (rows.length === 0) throw new Error("empty profile");
  const depths = rows.map((r) => r.depth_gcm2);
  const doses = rows.map((r) => r.dose_sv).filter((d) => d > 0);
  const depthMin = Math.min(...depths);
  const depthMax = Math.max(...depths);
  // Keep the three limit lines inside the drawable range.
  const doseMin = Math.min(...doses, policy.public_limit_sv);
  const doseMax = Math.max(...doses, policy.deterministic_limit_sv);

  const innerW = box.width - box.padLeft - box.padRight;
  const innerH = box.height - box.padTop - box.padBottom;
  const xScale = (depth: number) =>
    box.padLeft + ((depth - depthMin) / (depthMax - depthMin)) * innerW;
  const yScale = (doseSv: number) =>
    box.padTop +
    ((log10(doseMax) - log10(doseSv)) / (log10(doseMax) - log10(doseMin))) * innerH;

  const points = rows
    .filter((r) => r.dose_sv > 0)
    .map((row) => ({ x: xScale(row.depth_gcm2), y: yScale(row.dose_sv), row }));
  const path = points
    .map((p, i) => `${i === 0 ? "M" : "L"}${p.x.toFixed(2)},${p.y.toFixed(2)}`)
    .join(" ");

  const limitLines: LimitLine[] = [
    { dose_sv: policy.public_limit_sv, label: "public" },
    { dose_sv: policy.occupational_limit_sv, label: "occupational" },
    { dose_sv: policy.deterministic_limit_sv, label: "deterministic" },
  ].map((line) => ({ ...line, y: yScale(line.dose_sv) }));

  const markers: AltitudeMarker[] = [];
  for (const target of [12, 9.5, 7]) {
    const row = rows.find((r) => r.altitude_km === target);
    if (row) {
      markers.push({
        x: xScale(row.depth_gcm2),
        label: `${target} km`,
        depth_gcm2: row.depth_gcm2,
      });
    }
  }

  return { path, points, limitLines, markers, xScale, yScale };
}

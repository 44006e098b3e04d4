// Console state and the small pieces of request plumbing that need to be
// correct: slider clamping to the engine's validated altitude band, the
// limit preset to request parameter mapping, and latest-wins resolution
// for overlapping what-if requests.

import type { AltitudeBand, Policy, PolicyPreset } from "./types.js";

export interface ConsoleState {
  scenarioId: string;
  preset: PolicyPreset;
  altitudeKm: number;
}

/** Clamp a slider value into the engine's validated altitude band. */
export function clampAltitude(value: number, band: AltitudeBand): number {
  if (Number.isNaN(value)) return band.ceiling_km;
  return Math.min(Math.max(value, band.floor_km), band.ceiling_km);
}

/**
 * Request parameter (mSv) for a policy preset. The thresholds come from
 * the policy payload in Sv; requests speak mSv.
 */
export function presetLimitMsv(preset: PolicyPreset, policy: Policy): number {
  switch (preset) {
    case "public":
      return policy.public_limit_sv * 1000;
    case "occupational":
      return policy.occupational_limit_sv * 1000;
    case "deterministic":
      return policy.deterministic_limit_sv * 1000;
  }
}

/**
 * Monotone ticket counter: a response is applied only when it belongs to
 * the newest request. Slower responses from superseded requests lose.
 */
export class LatestWins {
  private current = 0;

  begin(): number {
    this.current += 1;
    return this.current;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.current;
  }
}

/** Trailing-edge debounce used for slider input events. */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  delayMs: number,
  timers: { set: (cb: () => void, ms: number) => number; clear: (id: number) => void } = {
    set: (cb, ms) => setTimeout(cb, ms) as unknown as number,
    clear: (id) => clearTimeout(id),
  },
): (...args: A) => void {
  let pending: number | null = null;
  return (...args: A) => {
    if (pending !== null) timers.clear(pending);
    pending = timers.set(() => {
      pending = null;
      fn(...args);
    }, delayMs);
  };
}

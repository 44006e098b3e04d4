import { describe, expect, it } from "vitest";

import { LatestWins, clampAltitude, debounce, presetLimitMsv } from "../src/state.js";
import type { ScenariosResponse } from "../src/types.js";

import scenariosFixture from "./fixtures/scenarios.json";

const catalog = scenariosFixture as unknown as ScenariosResponse;
const band = catalog.altitude_band;

describe("clampAltitude", () => {
  it("passes values inside the band through", () => {
    expect(clampAltitude(9.5, band)).toBe(9.5);
  });

  it("never goes below the floor or above the ceiling", () => {
    expect(clampAltitude(3, band)).toBe(band.floor_km);
    expect(clampAltitude(14, band)).toBe(band.ceiling_km);
    expect(clampAltitude(Number.NaN, band)).toBe(band.ceiling_km);
  });

  it("uses the engine's validated band from the catalog payload", () => {
    expect(band.floor_km).toBe(7);
    expect(band.ceiling_km).toBe(12);
  });
});

describe("presetLimitMsv", () => {
  it("maps presets to the policy thresholds in mSv", () => {
    expect(presetLimitMsv("public", catalog.policy)).toBe(1);
    expect(presetLimitMsv("occupational", catalog.policy)).toBe(20);
    expect(presetLimitMsv("deterministic", catalog.policy)).toBe(100);
  });
});

describe("LatestWins", () => {
  it("accepts only the newest ticket", () => {
    const tickets = new LatestWins();
    const first = tickets.begin();
    const second = tickets.begin();
    expect(tickets.isCurrent(first)).toBe(false);
    expect(tickets.isCurrent(second)).toBe(true);
  });

  it("a late response from an old request loses", () => {
    const tickets = new LatestWins();
    const slow = tickets.begin();
    const fast = tickets.begin();
    // fast response lands first, then the stale one arrives
    expect(tickets.isCurrent(fast)).toBe(true);
    expect(tickets.isCurrent(slow)).toBe(false);
  });
});

describe("debounce", () => {
  it("fires only the trailing call", () => {
    const pending = new Map<number, () => void>();
    let nextId = 0;
    const timers = {
      set: (cb: () => void, _ms: number) => {
        nextId += 1;
        pending.set(nextId, cb);
        return nextId;
      },
      clear: (id: number) => {
        pending.delete(id);
      },
    };
    const calls: number[] = [];
    const slide = debounce((v: number) => calls.push(v), 150, timers);
    slide(1);
    slide(2);
    slide(3);
    expect(pending.size).toBe(1);
    for (const cb of pending.values()) cb();
    expect(calls).toEqual([3]);
  });
});

// Thin fetch client for the gateway. No recomputation, no reformatting:
// responses pass through as-is so rendered values stay byte-identical to
// what the engine produced.

import type {
  PlanResponse,
  PremiumResponse,
  ProfileResponse,
  ScenariosResponse,
  WhatIfResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

async function parse<T>(resp: Response): Promise<T> {
  if (!resp.ok) {
    const body = await resp.json().catch(() => null);
    const message =
      body && typeof body.error === "string"
        ? body.error
        : `API error ${resp.status}`;
    throw new ApiError(message, resp.status);
  }
  return resp.json() as Promise<T>;
}

export class ApiClient {
  constructor(readonly base: string = "/api/v1") {}

  private get<T>(path: string): Promise<T> {
    return fetch(`${this.base}${path}`).then((r) => parse<T>(r));
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return fetch(`${this.base}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    }).then((r) => parse<T>(r));
  }

  scenarios(): Promise<ScenariosResponse> {
    return this.get("/scenarios");
  }

  doseProfile(scenario: string, points = 60): Promise<ProfileResponse> {
    const params = new URLSearchParams({ scenario, points: String(points) });
    return this.get(`/dose-profile?${params}`);
  }

  plan(
    scenario: string,
    limitMsv: number,
    options: { altitudes?: number[]; continuous?: boolean } = {},
  ): Promise<PlanResponse> {
    return this.post("/plan", {
      scenario,
      limit_msv: limitMsv,
      altitudes: options.altitudes ?? null,
      continuous: options.continuous ?? false,
    });
  }

  whatIf(scenario: string, limitMsv: number, altitudeKm: number): Promise<WhatIfResponse> {
    return this.post("/what-if", {
      scenario,
      limit_msv: limitMsv,
      altitude_km: altitudeKm,
    });
  }

  premium(
    limitMsv: number,
    options: { mode?: "exact" | "mc"; years?: number; seed?: number; exposure?: number } = {},
  ): Promise<PremiumResponse> {
    return this.post("/premium", {
      limit_msv: limitMsv,
      mode: options.mode ?? "exact",
      years: options.years ?? 10000,
      seed: options.seed ?? 0,
      exposure_fraction: options.exposure ?? 1.0,
    });
  }
}

// Payload shapes of the /api/v1 endpoints. Every number or string the
// console displays is copied from one of these responses.

export interface PlanInfo {
  kind: "proceed" | "descend" | "cancel";
  altitude_km: number | null;
  label: string;
}

export interface Evaluation {
  plan: PlanInfo;
  dose_sv: number;
  dose_msv: string;
  band: string;
  compliant: boolean;
  loss_cents: number;
  loss_usd: string;
}

export interface ScenarioBrief {
  id: string;
  label: string;
}

export interface PlanResponse {
  scenario: ScenarioBrief;
  limit_msv: number;
  limit_sv: number;
  evaluations: Evaluation[];
  recommendation: Evaluation;
  continuous_optimum: Evaluation | null;
  config_hash: string;
}

export interface WhatIfResponse {
  scenario: ScenarioBrief;
  limit_msv: number;
  limit_sv: number;
  altitude_km: number;
  depth_gcm2: number;
  dose_sv: number;
  dose_msv: string;
  band: string;
  compliant: boolean;
  plan: PlanInfo;
  loss_cents: number;
  loss_usd: string;
  config_hash: string;
}

export interface ProfileRow {
  depth_gcm2: number;
  altitude_km: number;
  dose_sv: number;
  dose_msv: string;
  extrapolated: boolean;
}

export interface ProfileResponse {
  scenario: ScenarioBrief;
  rows: ProfileRow[];
  config_hash: string;
}

export interface ScenarioInfo {
  id: string;
  label: string;
  recurrence_years: number | null;
  annual_rate_per_year: number;
  sunspot_area_fraction: number | null;
  energy_erg: number | null;
  reference_dose_sv: number | null;
  x_magnitude: number | null;
  dose_ready: boolean;
}

export interface Policy {
  public_limit_sv: number;
  occupational_limit_sv: number;
  deterministic_limit_sv: number;
  fatal_dose_sv: number;
  background_annual_sv: number;
}

export interface AltitudeBand {
  floor_km: number;
  ceiling_km: number;
  reference_km: number;
}

export interface ScenariosResponse {
  scenarios: ScenarioInfo[];
  policy: Policy;
  altitude_band: AltitudeBand;
  config_hash: string;
}

export interface PremiumItem {
  scenario: string;
  annual_frequency: number;
  severity_cents: number;
  severity_usd: string;
}

export interface PremiumResponse {
  limit_msv: number;
  limit_sv: number;
  mode: "exact" | "mc";
  exposure_fraction: number;
  items: PremiumItem[];
  premium_cents: number;
  premium_usd: string;
  expected_annual_loss_cents?: number;
  standard_error_cents?: number;
  n_years?: number;
  seed?: number;
  config_hash: string;
}

export type PolicyPreset = "public" | "occupational" | "deterministic";

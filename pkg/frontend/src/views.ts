// Pure view-model builders. Each function turns an API response into the
// strings a panel shows, copying fields verbatim -- no arithmetic on
// doses or money happens on the client.

import type {
  Evaluation,
  PlanResponse,
  PremiumResponse,
  WhatIfResponse,
} from "./types.js";

export type Badge = "compliant" | "non-compliant";

export interface PlanCard {
  title: string;
  dose: string;
  band: string;
  badge: Badge;
  loss: string;
  highlighted: boolean;
}

function badgeOf(compliant: boolean): Badge {
  return compliant ? "compliant" : "non-compliant";
}

function sameEvaluation(a: Evaluation, b: Evaluation): boolean {
  return (
    a.plan.kind === b.plan.kind &&
    a.plan.altitude_km === b.plan.altitude_km &&
    a.loss_cents === b.loss_cents
  );
}

/** Plan cards in the API's order, the recommended one highlighted. */
export function planBoard(response: PlanResponse): PlanCard[] {
  return response.evaluations.map((evaluation) => ({
    title: evaluation.plan.label,
    dose: evaluation.dose_msv,
    band: evaluation.band,
    badge: badgeOf(evaluation.compliant),
    loss: evaluation.loss_usd,
    highlighted: sameEvaluation(evaluation, response.recommendation),
  }));
}

export interface WhatIfCard {
  title: string;
  dose: string;
  band: string;
  badge: Badge;
  loss: string;
  depth: string;
}

export function whatIfCard(response: WhatIfResponse): WhatIfCard {
  return {
    title: response.plan.label,
    dose: response.dose_msv,
    band: response.band,
    badge: badgeOf(response.compliant),
    loss: response.loss_usd,
    depth: `${response.depth_gcm2} g/cm²`,
  };
}

export interface PremiumView {
  premium: string;
  mode: string;
  detail: string | null;
  items: { scenario: string; frequency: string; severity: string }[];
}

export function premiumPanel(response: PremiumResponse): PremiumView {
  return {
    premium: `${response.premium_usd}/yr`,
    mode: response.mode,
    detail:
      response.mode === "mc"
        ? `${response.n_years} simulated years, seed ${response.seed}`
        : null,
    items: response.items.map((item) => ({
      scenario: item.scenario,
      frequency: `${item.annual_frequency}/yr`,
      severity: item.severity_usd,
    })),
  };
}

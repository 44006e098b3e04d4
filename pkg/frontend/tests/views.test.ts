// Parity with the API fixtures captured from a live gateway: every string
// a card shows must be byte-identical to a response field.

import { describe, expect, it } from "vitest";

import { planBoard, premiumPanel, whatIfCard } from "../src/views.js";
import type { PlanResponse, PremiumResponse, WhatIfResponse } from "../src/types.js";

import planPublicFixture from "./fixtures/plan-decadal-public.json";
import planOccupationalFixture from "./fixtures/plan-decadal-occupational.json";
import planPmfFixture from "./fixtures/plan-pmf-public.json";
import whatIf7Fixture from "./fixtures/whatif-decadal-7.json";
import whatIf12Fixture from "./fixtures/whatif-decadal-12.json";
import premiumExactFixture from "./fixtures/premium-exact.json";
import premiumMcFixture from "./fixtures/premium-mc.json";

const planPublic = planPublicFixture as unknown as PlanResponse;
const planOccupational = planOccupationalFixture as unknown as PlanResponse;
const planPmf = planPmfFixture as unknown as PlanResponse;
const whatIf7 = whatIf7Fixture as unknown as WhatIfResponse;
const whatIf12 = whatIf12Fixture as unknown as WhatIfResponse;
const premiumExact = premiumExactFixture as unknown as PremiumResponse;
const premiumMc = premiumMcFixture as unknown as PremiumResponse;

describe("planBoard", () => {
  it("highlights the recommended descent with strings copied from the API", () => {
    const cards = planBoard(planPublic);
    const highlighted = cards.filter((c) => c.highlighted);
    expect(highlighted).toHaveLength(1);
    const card = highlighted[0]!;
    // Byte-identical to the API fields.
    expect(card.title).toBe(planPublic.recommendation.plan.label);
    expect(card.title).toBe("Descend 9.5 km");
    expect(card.loss).toBe(planPublic.recommendation.loss_usd);
    expect(card.loss).toBe("$4,680.00");
    expect(card.badge).toBe("compliant");
  });

  it("keeps the API ordering", () => {
    const cards = planBoard(planPublic);
    expect(cards.map((c) => c.title)).toEqual(
      planPublic.evaluations.map((e) => e.plan.label),
    );
    expect(cards.map((c) => c.title)).toEqual([
      "Proceed at 12 km",
      "Descend 9.5 km",
      "Descend 7 km",
      "Cancel flight",
    ]);
  });

  it("highlights proceed under the occupational limit", () => {
    const highlighted = planBoard(planOccupational).find((c) => c.highlighted)!;
    expect(highlighted.title).toBe("Proceed at 12 km");
    expect(highlighted.loss).toBe("$0.00");
  });

  it("highlights cancel for the possible maximum flare", () => {
    const highlighted = planBoard(planPmf).find((c) => c.highlighted)!;
    expect(highlighted.title).toBe("Cancel flight");
    expect(highlighted.loss).toBe("$25,200.00");
  });

  it("marks non-compliant plans", () => {
    const proceed = planBoard(planPublic)[0]!;
    expect(proceed.badge).toBe("non-compliant");
    expect(proceed.dose).toBe("1.20 mSv");
  });
});

describe("whatIfCard", () => {
  it("renders the 7 km slide with the engine's display rounding", () => {
    const card = whatIfCard(whatIf7);
    expect(card.dose).toBe(whatIf7.dose_msv);
    expect(card.dose).toBe("0.120 mSv"); // same string the CLI prints
    expect(card.badge).toBe("compliant");
    expect(card.loss).toBe("$6,210.00");
  });

  it("flags the cruise altitude as exceeding the public limit", () => {
    const card = whatIfCard(whatIf12);
    expect(card.dose).toBe("1.20 mSv");
    expect(card.band).toBe("exceeds-public");
    expect(card.badge).toBe("non-compliant");
    expect(card.loss).toBe("$0.00");
  });
});

describe("premiumPanel", () => {
  it("shows the exact quote", () => {
    const view = premiumPanel(premiumExact);
    expect(view.premium).toBe(`${premiumExact.premium_usd}/yr`);
    expect(view.premium).toBe("$468.00/yr");
    expect(view.mode).toBe("exact");
    expect(view.detail).toBeNull();
    expect(view.items.map((i) => i.scenario)).toContain("decadal-active");
  });

  it("describes the Monte Carlo run", () => {
    const view = premiumPanel(premiumMc);
    expect(view.mode).toBe("mc");
    expect(view.detail).toBe(`${premiumMc.n_years} simulated years, seed ${premiumMc.seed}`);
  });
});

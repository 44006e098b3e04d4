// Browser wiring: fetch, subscribe, render. All decisions and numbers come
// from the API; this file only moves strings into the document.

import { ApiClient } from "./api.js";
import { DEFAULT_BOX, doseChart } from "./chart.js";
import { LatestWins, clampAltitude, debounce, presetLimitMsv } from "./state.js";
import type {
  AltitudeBand,
  PlanResponse,
  Policy,
  PolicyPreset,
  ProfileResponse,
  ScenariosResponse,
} from "./types.js";
import { planBoard, premiumPanel, whatIfCard } from "./views.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const api = new ApiClient();
const whatIfTickets = new LatestWins();

let catalog: ScenariosResponse | null = null;
let state = { scenarioId: "decadal-active", preset: "public" as PolicyPreset, altitudeKm: 12 };

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function showError(message: string | null): void {
  const banner = byId<HTMLDivElement>("error-banner");
  banner.textContent = message ?? "";
  banner.hidden = message === null;
}

function markStale(panelId: string, stale: boolean): void {
  byId(panelId).classList.toggle("stale", stale);
}

function policy(): Policy {
  if (!catalog) throw new Error("catalog not loaded");
  return catalog.policy;
}

function band(): AltitudeBand {
  if (!catalog) throw new Error("catalog not loaded");
  return catalog.altitude_band;
}

function limitMsv(): number {
  return presetLimitMsv(state.preset, policy());
}

// -- renderers ---------------------------------------------------------------

function renderPlanBoard(response: PlanResponse): void {
  const board = byId<HTMLDivElement>("plan-board");
  board.replaceChildren();
  for (const card of planBoard(response)) {
    const node = el("div", card.highlighted ? "card plan-card recommended" : "card plan-card");
    node.append(el("h3", undefined, card.title));
    node.append(el("div", `badge ${card.badge}`, card.badge));
    node.append(el("div", "dose", card.dose));
    node.append(el("div", "band", card.band));
    node.append(el("div", "loss", card.loss));
    if (card.highlighted) node.append(el("div", "flag", "recommended"));
    board.append(node);
  }
  markStale("plan-board", false);
}

function renderWhatIf(responseAltitude: number, response: Parameters<typeof whatIfCard>[0]): void {
  const card = whatIfCard(response);
  byId("whatif-title").textContent = card.title;
  byId("whatif-dose").textContent = card.dose;
  byId("whatif-depth").textContent = card.depth;
  byId("whatif-band").textContent = card.band;
  byId("whatif-loss").textContent = card.loss;
  const badge = byId("whatif-badge");
  badge.textContent = card.badge;
  badge.className = `badge ${card.badge}`;
  byId("whatif-altitude-readout").textContent = `${responseAltitude} km`;
  markStale("whatif-panel", false);
}

function renderChart(profile: ProfileResponse): void {
  const chart = doseChart(profile.rows, policy(), DEFAULT_BOX);
  const svg = byId<HTMLElement>("dose-chart");
  svg.replaceChildren();

  for (const line of chart.limitLines) {
    const path = document.createElementNS(SVG_NS, "line");
    path.setAttribute("x1", String(DEFAULT_BOX.padLeft));
    path.setAttribute("x2", String(DEFAULT_BOX.width - DEFAULT_BOX.padRight));
    path.setAttribute("y1", line.y.toFixed(2));
    path.setAttribute("y2", line.y.toFixed(2));
    path.setAttribute("class", "limit-line");
    svg.append(path);
    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String(DEFAULT_BOX.width - DEFAULT_BOX.padRight - 4));
    text.setAttribute("y", (line.y - 4).toFixed(2));
    text.setAttribute("class", "limit-label");
    text.setAttribute("text-anchor", "end");
    text.textContent = line.label;
    svg.append(text);
  }

  for (const marker of chart.markers) {
    const tick = document.createElementNS(SVG_NS, "line");
    tick.setAttribute("x1", marker.x.toFixed(2));
    tick.setAttribute("x2", marker.x.toFixed(2));
    tick.setAttribute("y1", String(DEFAULT_BOX.padTop));
    tick.setAttribute("y2", String(DEFAULT_BOX.height - DEFAULT_BOX.padBottom));
    tick.setAttribute("class", "altitude-marker");
    svg.append(tick);
    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", (marker.x + 3).toFixed(2));
    text.setAttribute("y", String(DEFAULT_BOX.height - DEFAULT_BOX.padBottom - 6));
    text.setAttribute("class", "marker-label");
    text.textContent = marker.label;
    svg.append(text);
  }

  const curve = document.createElementNS(SVG_NS, "path");
  curve.setAttribute("d", chart.path);
  curve.setAttribute("class", "dose-curve");
  curve.setAttribute("fill", "none");
  svg.append(curve);
}

function renderPremium(response: Parameters<typeof premiumPanel>[0]): void {
  const view = premiumPanel(response);
  byId("premium-value").textContent = view.premium;
  byId("premium-mode").textContent = view.detail ? `Monte Carlo: ${view.detail}` : "exact";
  const list = byId<HTMLUListElement>("premium-items");
  list.replaceChildren();
  for (const item of view.items) {
    list.append(el("li", undefined, `${item.scenario}: ${item.frequency} x ${item.severity}`));
  }
}

// -- refresh flows -----------------------------------------------------------

async function refreshPlanAndChart(): Promise<void> {
  markStale("plan-board", true);
  try {
    const [plan, profile] = await Promise.all([
      api.plan(state.scenarioId, limitMsv()),
      api.doseProfile(state.scenarioId),
    ]);
    renderPlanBoard(plan);
    renderChart(profile);
    showError(null);
  } catch (err) {
    showError(`plan refresh failed: ${(err as Error).message}`);
  }
}

async function refreshWhatIf(): Promise<void> {
  const ticket = whatIfTickets.begin();
  markStale("whatif-panel", true);
  try {
    const response = await api.whatIf(state.scenarioId, limitMsv(), state.altitudeKm);
    if (!whatIfTickets.isCurrent(ticket)) return; // superseded by a newer slide
    renderWhatIf(response.altitude_km, response);
    showError(null);
  } catch (err) {
    if (whatIfTickets.isCurrent(ticket)) {
      showError(`what-if failed: ${(err as Error).message}`);
    }
  }
}

async function refreshPremium(): Promise<void> {
  const advanced = byId<HTMLInputElement>("premium-advanced").checked;
  const seed = Number(byId<HTMLInputElement>("premium-seed").value) || 0;
  try {
    const response = await api.premium(limitMsv(), advanced ? { mode: "mc", seed } : {});
    renderPremium(response);
  } catch (err) {
    showError(`premium failed: ${(err as Error).message}`);
  }
}

function refreshAll(): void {
  void refreshPlanAndChart();
  void refreshWhatIf();
  void refreshPremium();
}

// -- bootstrap -----------------------------------------------------------------

async function init(): Promise<void> {
  try {
    catalog = await api.scenarios();
  } catch (err) {
    showError(`cannot load scenario catalog: ${(err as Error).message}`);
    return;
  }

  const select = byId<HTMLSelectElement>("scenario-select");
  for (const scenario of catalog.scenarios.filter((s) => s.dose_ready)) {
    const option = el("option", undefined, scenario.label);
    option.value = scenario.id;
    select.append(option);
  }
  select.value = state.scenarioId;
  select.addEventListener("change", () => {
    state.scenarioId = select.value;
    refreshAll();
  });

  const presetSelect = byId<HTMLSelectElement>("preset-select");
  const presets: PolicyPreset[] = ["public", "occupational", "deterministic"];
  for (const preset of presets) {
    const option = el("option", undefined, `${preset} (${presetLimitMsv(preset, policy())} mSv)`);
    option.value = preset;
    presetSelect.append(option);
  }
  presetSelect.value = state.preset;
  presetSelect.addEventListener("change", () => {
    state.preset = presetSelect.value as PolicyPreset;
    refreshAll();
  });

  const slider = byId<HTMLInputElement>("altitude-slider");
  slider.min = String(band().floor_km);
  slider.max = String(band().ceiling_km);
  slider.step = "0.1";
  slider.value = String(clampAltitude(state.altitudeKm, band()));
  state.altitudeKm = Number(slider.value);
  const slideHandler = debounce(() => {
    state.altitudeKm = clampAltitude(Number(slider.value), band());
    void refreshWhatIf();
  }, 150);
  slider.addEventListener("input", slideHandler);

  byId<HTMLInputElement>("premium-advanced").addEventListener("change", () => void refreshPremium());
  byId<HTMLInputElement>("premium-seed").addEventListener("change", () => void refreshPremium());

  refreshAll();
}

void init();

// Single-page wiring: create-trial form -> trial page -> cohort entry loop.
// All numbers and decisions come from the service; this file only moves
// payloads between the API client and the render functions.

import { ApiError, TrialApi } from "./api";
import {
  renderAnnouncedCohort,
  renderCreateError,
  renderDoseLevels,
  renderHistory,
  renderPiBars,
  renderRecommendation,
} from "./views";
import { renderTrialHeader } from "./views";
import type {
  HistoryItem,
  OutcomeEntry,
  Recommendation,
  RefitSummary,
  TrialView,
} from "./types";

interface AppState {
  trial: TrialView | null;
  summary: RefitSummary | null;
  recommendation: Recommendation | null;
  history: HistoryItem[];
  cF: number | null;
  busy: boolean;
}

const state: AppState = {
  trial: null,
  summary: null,
  recommendation: null,
  history: [],
  cF: null,
  busy: false,
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function baseUrl(): string {
  return (el<HTMLInputElement>("base-url").value || "").replace(/\/$/, "");
}

function api(): TrialApi {
  return new TrialApi(baseUrl());
}

function readCreateForm() {
  const levels = el<HTMLInputElement>("levels").value
    .split(",").map((v) => Number(v.trim()));
  const guesses = el<HTMLInputElement>("guesses").value
    .split(",").map((v) => Number(v.trim()));
  return {
    grid: {
      levels,
      ref_level: Number(el<HTMLInputElement>("ref-level").value),
      target: Number(el<HTMLInputElement>("target").value),
      initial_guesses: guesses,
    },
    design: {
      n: Number(el<HTMLInputElement>("n-max").value),
      k_model: Number(el<HTMLInputElement>("k-model").value),
      c_f: Number(el<HTMLInputElement>("c-f").value),
      s_base: Number(el<HTMLInputElement>("s-base").value),
      method: el<HTMLSelectElement>("method").value,
    },
  };
}

function redraw(): void {
  const page = el("trial-page");
  if (!state.trial) {
    page.hidden = true;
    return;
  }
  page.hidden = false;
  el("trial-header").innerHTML = renderTrialHeader(state.trial);
  el("announced").innerHTML = renderAnnouncedCohort(state.trial);
  el("dose-levels").innerHTML = renderDoseLevels(state.trial, state.summary);
  el("pi-bars").innerHTML = state.summary
    ? renderPiBars(state.summary)
    : `<p class="pending">No refit yet; the model phase has not started.</p>`;
  el("recommendation").innerHTML = renderRecommendation(
    state.recommendation, state.summary, state.cF,
  );
  el("history").innerHTML = renderHistory(state.history);
  renderOutcomeRows();
}

function renderOutcomeRows(): void {
  const host = el("outcome-rows");
  const trial = state.trial;
  if (!trial || trial.announced === null) {
    host.innerHTML = "";
    el<HTMLButtonElement>("submit-cohort").disabled = true;
    return;
  }
  const rows: string[] = [];
  for (let i = 0; i < trial.announced.size; i++) {
    rows.push(`
      <tr>
        <td>volunteer ${i + 1}</td>
        <td><input type="checkbox" class="outcome-activity" data-idx="${i}"></td>
        <td><input type="checkbox" class="outcome-safety" data-idx="${i}"></td>
      </tr>`);
  }
  host.innerHTML = rows.join("");
  el<HTMLButtonElement>("submit-cohort").disabled = state.busy;
}

function collectOutcomes(): OutcomeEntry[] {
  const acts = Array.from(document.querySelectorAll<HTMLInputElement>(".outcome-activity"));
  const safs = Array.from(document.querySelectorAll<HTMLInputElement>(".outcome-safety"));
  return acts.map((a, i) => ({ activity: a.checked, safety: safs[i].checked }));
}

async function onCreate(event: Event): Promise<void> {
  event.preventDefault();
  if (state.busy) return;
  state.busy = true;
  el("create-error").innerHTML = "";
  const submit = el<HTMLButtonElement>("create-submit");
  submit.disabled = true;
  try {
    const config = readCreateForm();
    const seedRaw = el<HTMLInputElement>("seed").value;
    const trial = await api().createTrial(
      config, seedRaw === "" ? undefined : Number(seedRaw),
    );
    state.trial = trial;
    state.summary = null;
    state.recommendation = null;
    state.history = [];
    state.cF = config.design.c_f;
    redraw();
  } catch (err) {
    if (err instanceof ApiError) {
      el("create-error").innerHTML = renderCreateError(err.detail);
    } else {
      el("create-error").innerHTML = renderCreateError({
        code: "network", message: String(err),
      });
    }
  } finally {
    state.busy = false;
    submit.disabled = false;
  }
}

async function onSubmitCohort(event: Event): Promise<void> {
  event.preventDefault();
  const trial = state.trial;
  if (!trial || trial.announced === null || state.busy) return;
  state.busy = true;
  el<HTMLButtonElement>("submit-cohort").disabled = true;
  const level = trial.announced.level;
  try {
    const reply = await api().recordCohort(
      trial.id, trial.cohorts_recorded, collectOutcomes(),
    );
    state.history.push({
      seq: reply.seq,
      level,
      outcomes: collectOutcomes(),
      recommendation: reply.recommendation,
    });
    state.trial = reply.trial;
    if (reply.refit) state.summary = reply.refit;
    state.recommendation = reply.recommendation;
  } catch (err) {
    // retransmission with the same seq is safe; surface other errors
    alert(err instanceof ApiError ? err.detail.message : String(err));
  } finally {
    state.busy = false;
    redraw();
  }
}

export function boot(): void {
  el("create-form").addEventListener("submit", onCreate);
  el("cohort-form").addEventListener("submit", onSubmitCohort);
  redraw();
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", boot);
}

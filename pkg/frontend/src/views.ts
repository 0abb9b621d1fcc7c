// Pure rendering: typed service payloads in, HTML strings out.
//
// Every number shown in the document is the verbatim string form of the
// value the service sent (long decimals are clamped visually by CSS, never
// rewritten), so the fixture tests can assert byte equality. Derived
// quantities (bar widths) live only in style attributes.

import type {
  HistoryItem,
  Rationale,
  Recommendation,
  RefitSummary,
  TrialView,
} from "./types";

export function verbatim(value: number | null): string {
  return value === null ? "—" : String(value);
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function piBarWidths(pi: number[]): number[] {
  return pi.map((p) => p * 100);
}

const PHASE_LABELS: Record<TrialView["phase"], string> = {
  startup: "start-up phase",
  model_based: "model-based phase",
  stopped_futility: "stopped: no admissible dose",
  stopped_safety_exhausted: "stopped: all doses eliminated on safety",
  completed: "completed",
};

export function renderTrialHeader(trial: TrialView): string {
  return `
    <header class="trial-header">
      <h2>Trial <code>${esc(trial.id)}</code></h2>
      <span class="phase phase-${trial.phase}">${PHASE_LABELS[trial.phase]}</span>
      <dl class="trial-facts">
        <dt>method</dt><dd>${trial.method}</dd>
        <dt>enrolled</dt><dd><span class="n-enrolled">${verbatim(trial.n_enrolled)}</span>
          / ${verbatim(trial.n_max)}</dd>
        <dt>start-up cohort</dt><dd>${verbatim(trial.k_start)}</dd>
        <dt>model cohort</dt><dd>${verbatim(trial.k_model)}</dd>
      </dl>
    </header>`;
}

export function renderAnnouncedCohort(trial: TrialView): string {
  if (trial.announced === null) {
    return `<p class="announced none">No cohort is awaiting outcomes.</p>`;
  }
  return `
    <p class="announced">Next cohort:
      <strong class="announced-size">${verbatim(trial.announced.size)}</strong>
      volunteer(s) at dose level
      <strong class="announced-level">${verbatim(trial.announced.level)}</strong>.
    </p>`;
}

export function renderDoseLevels(trial: TrialView, summary: RefitSummary | null): string {
  const rows: string[] = [];
  for (let level = 1; level <= trial.n_levels; level++) {
    const eliminated = level > trial.l_prime;
    const phi = summary ? verbatim(summary.phi[level - 1]) : "—";
    const exceed = summary ? verbatim(summary.exceed[level - 1]) : "—";
    rows.push(`
      <tr class="dose-row${eliminated ? " eliminated" : ""}" data-level="${level}">
        <td>dose ${level}</td>
        <td class="alloc">${verbatim(trial.alloc_by_level[level - 1])}</td>
        <td class="phi clamp">${phi}</td>
        <td class="exceed clamp">${exceed}</td>
        <td>${eliminated ? "eliminated" : "open"}</td>
      </tr>`);
  }
  return `
    <table class="dose-table">
      <thead><tr><th>level</th><th>allocated</th><th>posterior activity</th>
        <th>P(activity &gt; target)</th><th>status</th></tr></thead>
      <tbody>${rows.join("")}</tbody>
    </table>`;
}

export function renderPiBars(summary: RefitSummary): string {
  const widths = piBarWidths(summary.pi);
  const bars = summary.pi
    .map(
      (p, i) => `
      <div class="pi-bar-row">
        <span class="pi-label">plateau at ${i + 1}${i + 1 === summary.tau_hat ? " ★" : ""}</span>
        <div class="pi-bar" style="width: ${widths[i]}%"></div>
        <span class="pi-value clamp">${verbatim(p)}</span>
      </div>`,
    )
    .join("");
  return `<div class="pi-bars" data-total-width="${widths.reduce((a, b) => a + b, 0)}">
    ${bars}</div>`;
}

function rationaleDetails(rationale: Rationale): string {
  const parts = [
    `<dt>most probable plateau</dt><dd class="tau-hat">${verbatim(rationale.tau_hat)}</dd>`,
    `<dt>target-dose estimate</dt><dd class="mad-level">${verbatim(rationale.mad_level)}</dd>`,
    `<dt>admissible levels</dt><dd class="admissible">${
      rationale.admissible.length ? rationale.admissible.join(", ") : "none"
    }</dd>`,
  ];
  if (rationale.randomization_levels !== null && rationale.randomization_weights !== null) {
    const weights = rationale.randomization_levels
      .map(
        (lvl, i) =>
          `<li>level ${lvl}: <span class="clamp">${verbatim(
            rationale.randomization_weights![i],
          )}</span></li>`,
      )
      .join("");
    parts.push(
      `<dt>randomised over</dt><dd><ul class="randomization">${weights}</ul>
       (drew level <span class="drawn">${verbatim(rationale.drawn_level)}</span>)</dd>`,
    );
  }
  return `<dl class="rationale">${parts.join("")}</dl>`;
}

export function renderRecommendation(
  rec: Recommendation | null,
  summary: RefitSummary | null,
  cF: number | null,
): string {
  if (rec === null) {
    return `<section class="recommendation pending">
      Awaiting the first model-phase refit.</section>`;
  }
  if (rec.kind === "administer") {
    return `<section class="recommendation administer">
      <div class="dose-badge">dose ${verbatim(rec.level)}</div>
      <p>Administer the next cohort at level
        <strong class="rec-level">${verbatim(rec.level)}</strong>.</p>
      ${rationaleDetails(rec.rationale)}
    </section>`;
  }
  if (rec.kind === "stop_complete") {
    return `<section class="recommendation stop-banner complete">
      <h3>TRIAL COMPLETE</h3>
      <p>Selected dose level:
        <strong class="selected-level">${verbatim(rec.level)}</strong></p>
      ${rationaleDetails(rec.rationale)}
    </section>`;
  }
  const exceedRows =
    summary === null
      ? ""
      : summary.exceed
          .map(
            (e, i) => `
        <li>dose ${i + 1}: P(activity &gt; target) =
          <span class="exceed-value clamp">${verbatim(e)}</span>
          ${cF !== null ? ` &lt; ${verbatim(cF)}` : ""}</li>`,
          )
          .join("");
  return `<section class="recommendation stop-banner futility">
    <h3>STOP — no admissible dose</h3>
    <p>Every dose failed the activity requirement:</p>
    <ul class="futility-rationale">${exceedRows}</ul>
    ${rationaleDetails(rec.rationale)}
  </section>`;
}

export function renderHistory(items: HistoryItem[]): string {
  if (!items.length) {
    return `<p class="history empty">No cohorts recorded yet.</p>`;
  }
  const rows = items
    .map((item) => {
      const active = item.outcomes.filter((o) => o.activity).length;
      const safety = item.outcomes.filter((o) => o.safety).length;
      const decision = item.recommendation
        ? `${item.recommendation.kind}${
            item.recommendation.level !== null ? ` (level ${item.recommendation.level})` : ""
          }`
        : "escalation rule";
      return `
      <li class="history-item" data-seq="${item.seq}">
        cohort ${item.seq}: level ${item.level},
        <span class="active-count">${active}</span>/${item.outcomes.length} active${
        safety ? `, <span class="safety-count">${safety} safety issue(s)</span>` : ""
      } &rarr; ${decision}
      </li>`;
    })
    .join("");
  return `<ol class="history">${rows}</ol>`;
}

export function renderCreateError(detail: { code: string; message: string }): string {
  return `<p class="form-error" data-code="${esc(detail.code)}">${esc(detail.message)}</p>`;
}

// Mirrors of the trial service's JSON payloads. The UI renders these
// verbatim and computes no design statistics of its own.

export interface AnnouncedCohort {
  level: number;
  size: number;
}

export interface TrialView {
  id: string;
  phase: "startup" | "model_based" | "stopped_futility" |
         "stopped_safety_exhausted" | "completed";
  method: "selection" | "bma" | "blrm";
  n_max: number;
  n_enrolled: number;
  n_levels: number;
  k_start: number;
  k_model: number;
  l_prime: number;
  cohorts_recorded: number;
  announced: AnnouncedCohort | null;
  alloc_by_level: number[];
  created_at: number;
  updated_at: number;
}

export interface RefitSummary {
  method: string;
  pi: number[];
  tau_hat: number;
  phi: number[];
  var: number[];
  exceed: number[];
  selection_phi: number[] | null;
}

export interface Rationale {
  pi: number[];
  tau_hat: number;
  mad_level: number;
  admissible: number[];
  s: number | null;
  randomization_levels: number[] | null;
  randomization_weights: number[] | null;
  drawn_level: number | null;
}

export interface Recommendation {
  kind: "administer" | "stop_futility" | "stop_complete";
  level: number | null;
  rationale: Rationale;
}

export interface CohortResponse {
  seq: number;
  trial: TrialView;
  refit: RefitSummary | null;
  recommendation: Recommendation | null;
}

export interface PosteriorResponse {
  prior: boolean;
  summary: RefitSummary;
  models: {
    tau: number;
    log_marginal: number;
    phi_hat: number[];
    phi_var: number[];
    exceed: number[];
  }[];
}

export interface OutcomeEntry {
  activity: boolean;
  safety: boolean;
}

export interface ApiErrorDetail {
  code: string;
  message: string;
  expected_seq?: number;
}

export interface HistoryItem {
  seq: number;
  level: number;
  outcomes: OutcomeEntry[];
  recommendation: Recommendation | null;
}

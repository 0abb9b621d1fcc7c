// Thin typed client for the trial service.

import type {
  ApiErrorDetail,
  CohortResponse,
  OutcomeEntry,
  PosteriorResponse,
  TrialView,
} from "./types";

export class ApiError extends Error {
  readonly status: number;
  readonly detail: ApiErrorDetail;

  constructor(status: number, detail: ApiErrorDetail) {
    super(detail.message);
    this.status = status;
    this.detail = detail;
  }
}

export class TrialApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const resp = await this.fetchFn(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await resp.json();
    if (!resp.ok) {
      const detail: ApiErrorDetail = payload?.detail ?? {
        code: "unknown",
        message: `request failed with status ${resp.status}`,
      };
      throw new ApiError(resp.status, detail);
    }
    return payload as T;
  }

  createTrial(config: unknown, seed?: number): Promise<TrialView> {
    return this.request<TrialView>("POST", "/trials", { config, seed: seed ?? null });
  }

  getTrial(id: string): Promise<TrialView> {
    return this.request<TrialView>("GET", `/trials/${id}`);
  }

  listTrials(): Promise<{ trials: TrialView[] }> {
    return this.request<{ trials: TrialView[] }>("GET", "/trials");
  }

  recordCohort(id: string, seq: number, outcomes: OutcomeEntry[]): Promise<CohortResponse> {
    return this.request<CohortResponse>("POST", `/trials/${id}/cohorts`, {
      seq,
      outcomes,
    });
  }

  getPosterior(id: string): Promise<PosteriorResponse> {
    return this.request<PosteriorResponse>("GET", `/trials/${id}/posterior`);
  }

  getEvents(id: string): Promise<{ events: unknown[] }> {
    return this.request<{ events: unknown[] }>("GET", `/trials/${id}/events`);
  }
}

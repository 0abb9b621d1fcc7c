"""Interactive trial-conduct HTTP service.

Each trial is an append-only JSONL event log on disk; the in-memory
session is always the deterministic replay of that log, so a restart (or
crash, including one that leaves a partial final line) reconstructs the
exact same state, summaries, and recommendations.  Allocation
randomisation uses a per-trial seed persisted in the creation event.

Endpoints:
    POST /trials                    create a trial from a config document
    GET  /trials                    list sessions
    GET  /trials/{id}               session snapshot
    POST /trials/{id}/cohorts       record outcomes, get the next decision
    GET  /trials/{id}/posterior     latest refit (or prior predictive)
    GET  /trials/{id}/events        the raw event log
"""

from __future__ import annotations

import json
import os
import threading
import time
import uuid
from dataclasses import dataclass, field

import numpy as np
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .config import design_from_dict, design_to_dict
from .design import (
    DecisionKind,
    DesignConfig,
    decision_payload,
    initial_state,
    make_event,
    mark_stopped,
    record_model_cohort,
    recommend,
    startup_step,
    summary_payload,
    with_announced,
    TrialState,
)
from .errors import ConfigurationError, TrialStateError
from .inference import posterior_summary_counts
from .models import Phase

__all__ = ["TrialStore", "create_app", "serve"]

_STOPPED_PHASES = (Phase.STOPPED_FUTILITY, Phase.STOPPED_SAFETY_EXHAUSTED,
                   Phase.COMPLETED)


class OutcomeIn(BaseModel):
    activity: bool
    safety: bool


class CohortIn(BaseModel):
    seq: int = Field(ge=0)
    outcomes: list[OutcomeIn]


class CreateTrialIn(BaseModel):
    config: dict
    seed: int | None = None


@dataclass
class _Session:
    trial_id: str
    config: DesignConfig
    seed: int
    state: TrialState
    rng: np.random.Generator
    last_summary_payload: dict | None = None
    last_fits_payload: list[dict] | None = None
    responses: dict[int, dict] = field(default_factory=dict)
    created_at: float = 0.0
    updated_at: float = 0.0
    next_event_seq: int = 0
    lock: threading.Lock = field(default_factory=threading.Lock)


def _read_events(path: str) -> list[dict]:
    """Load a log, repairing a torn final line left by a crash.

    An unparsable tail is truncated; a parsable final record that merely
    lost its newline gets the newline restored so later appends stay
    line-delimited.
    """
    events: list[dict] = []
    with open(path, "rb") as fh:
        raw = fh.read()
    good_bytes = 0
    torn = False
    for line in raw.split(b"\n"):
        if not line:
            good_bytes += 1
            continue
        try:
            events.append(json.loads(line.decode("utf-8")))
            good_bytes += len(line) + 1
        except (ValueError, UnicodeDecodeError):
            torn = True
            break
    if torn:
        with open(path, "ab") as fh:
            fh.truncate(min(good_bytes, len(raw)))
    elif raw and not raw.endswith(b"\n"):
        with open(path, "ab") as fh:
            fh.write(b"\n")
    return events


class TrialStore:
    """Directory of event logs plus replayed in-memory sessions."""

    def __init__(self, data_dir: str):
        self.data_dir = data_dir
        os.makedirs(data_dir, exist_ok=True)
        self._sessions: dict[str, _Session] = {}
        self._lock = threading.Lock()

    def _log_path(self, trial_id: str) -> str:
        return os.path.join(self.data_dir, f"{trial_id}.jsonl")

    def _append(self, session: _Session, events: list[dict]) -> None:
        with open(self._log_path(session.trial_id), "a", encoding="utf-8") as fh:
            for ev in events:
                fh.write(json.dumps(ev, separators=(",", ":")) + "\n")
            fh.flush()
            os.fsync(fh.fileno())

    # -- lifecycle ---------------------------------------------------------

    def create(self, config_doc: dict, seed: int | None = None) -> dict:
        config = design_from_dict(config_doc)
        trial_id = uuid.uuid4().hex
        if seed is None:
            seed = int(np.random.SeedSequence().generate_state(1)[0])
        now = time.time()
        session = _Session(
            trial_id=trial_id,
            config=config,
            seed=seed,
            state=initial_state(config),
            rng=np.random.default_rng(seed),
            created_at=now,
            updated_at=now,
        )
        event = make_event(0, "created", {
            "config": design_to_dict(config),
            "seed": seed,
            "announced": {"level": 1, "size": config.k_start},
        }, timestamp=now)
        session.next_event_seq = 1
        with self._lock:
            self._append(session, [event])
            self._sessions[trial_id] = session
        return self.view(trial_id)

    def list_ids(self) -> list[str]:
        with self._lock:
            known = set(self._sessions)
        for name in os.listdir(self.data_dir):
            if name.endswith(".jsonl"):
                known.add(name[: -len(".jsonl")])
        return sorted(known)

    def _session(self, trial_id: str) -> _Session:
        with self._lock:
            sess = self._sessions.get(trial_id)
            if sess is not None:
                return sess
        path = self._log_path(trial_id)
        if not os.path.exists(path):
            raise KeyError(trial_id)
        sess = self._replay(trial_id, _read_events(path))
        with self._lock:
            return self._sessions.setdefault(trial_id, sess)

    def _replay(self, trial_id: str, events: list[dict]) -> _Session:
        if not events or events[0]["kind"] != "created":
            raise ConfigurationError(f"event log for {trial_id} has no creation record")
        created = events[0]["payload"]
        config = design_from_dict(created["config"])
        session = _Session(
            trial_id=trial_id,
            config=config,
            seed=created["seed"],
            state=initial_state(config),
            rng=np.random.default_rng(created["seed"]),
            created_at=events[0].get("timestamp") or 0.0,
            updated_at=events[0].get("timestamp") or 0.0,
        )
        session.next_event_seq = 1
        for ev in events[1:]:
            if ev["kind"] == "outcomes_recorded":
                payload = ev["payload"]
                self._advance(session, payload["cohort_seq"], payload["outcomes"],
                              persist=False, now=ev.get("timestamp"))
            session.next_event_seq = max(session.next_event_seq, ev["seq"] + 1)
            if ev.get("timestamp"):
                session.updated_at = ev["timestamp"]
        return session

    # -- core transition ---------------------------------------------------

    def _advance(self, session: _Session, cohort_seq: int, outcomes: list[dict],
                 persist: bool = True, now: float | None = None) -> dict:
        state = session.state
        config = session.config
        expected = state.cohorts_recorded
        if cohort_seq == expected - 1 and cohort_seq in session.responses:
            return session.responses[cohort_seq]
        if state.phase in _STOPPED_PHASES:
            raise TrialStateError("trial is already stopped")
        if cohort_seq != expected:
            raise _SeqConflict(expected)
        if len(outcomes) != state.announced_size:
            raise ConfigurationError(
                f"expected {state.announced_size} outcomes for this cohort, "
                f"got {len(outcomes)}"
            )

        if now is None:
            now = time.time() if persist else session.updated_at
        events: list[dict] = []

        def emit(kind: str, payload: dict):
            events.append(make_event(session.next_event_seq, kind, payload, now))
            session.next_event_seq += 1

        dosed_level = state.announced_level
        emit("outcomes_recorded", {
            "cohort_seq": cohort_seq,
            "level": dosed_level,
            "outcomes": [{"activity": bool(o["activity"]), "safety": bool(o["safety"])}
                         for o in outcomes],
        })
        if state.phase is Phase.STARTUP:
            state = startup_step(state, config, outcomes)
        else:
            state = record_model_cohort(state, config, outcomes)

        refit = None
        decision = None
        if state.phase is Phase.MODEL_BASED:
            n_by, y_by = state.activity_counts(config.grid.n_levels)
            summary, fits = posterior_summary_counts(
                config.grid, n_by, y_by, config.prior, config.quad, config.method
            )
            refit = summary_payload(summary)
            session.last_summary_payload = refit
            session.last_fits_payload = [
                {"tau": f.tau, "log_marginal": f.log_marginal,
                 "phi_hat": list(f.phi_hat), "phi_var": list(f.phi_var),
                 "exceed": list(f.exceed)} for f in fits
            ]
            emit("refit_summary", refit)
            rec = recommend(state, summary, config, session.rng)
            decision = decision_payload(rec)
            emit("decision", decision)
            if rec.kind is DecisionKind.ADMINISTER:
                state = with_announced(state, rec.level, config.k_model)
            elif rec.kind is DecisionKind.STOP_FUTILITY:
                state = mark_stopped(state, Phase.STOPPED_FUTILITY)
                emit("stop", {"reason": state.phase.value, "selected_level": None})
            else:
                state = mark_stopped(state, Phase.COMPLETED)
                emit("stop", {"reason": state.phase.value,
                              "selected_level": rec.level})
        elif state.phase is Phase.STOPPED_SAFETY_EXHAUSTED:
            emit("stop", {"reason": state.phase.value, "selected_level": None})

        if persist:
            self._append(session, events)
        session.state = state
        session.updated_at = now
        response = {
            "seq": cohort_seq,
            "trial": self._view_of(session),
            "refit": refit,
            "recommendation": decision,
        }
        session.responses[cohort_seq] = response
        return response

    # -- read models ---------------------------------------------------------

    def _view_of(self, session: _Session) -> dict:
        state = session.state
        announced = None
        if state.announced_level is not None:
            announced = {"level": state.announced_level, "size": state.announced_size}
        return {
            "id": session.trial_id,
            "phase": state.phase.value,
            "method": session.config.method.value,
            "n_max": session.config.n,
            "n_enrolled": state.n_enrolled,
            "n_levels": session.config.grid.n_levels,
            "k_start": session.config.k_start,
            "k_model": session.config.k_model,
            "l_prime": state.l_prime,
            "cohorts_recorded": state.cohorts_recorded,
            "announced": announced,
            "alloc_by_level": list(state.alloc_by_level(session.config.grid.n_levels)),
            "created_at": session.created_at,
            "updated_at": session.updated_at,
        }

    def view(self, trial_id: str) -> dict:
        return self._view_of(self._session(trial_id))

    def record_cohort(self, trial_id: str, seq: int, outcomes: list[dict]) -> dict:
        session = self._session(trial_id)
        with session.lock:
            return self._advance(session, seq, outcomes, persist=True)

    def posterior(self, trial_id: str) -> dict:
        session = self._session(trial_id)
        with session.lock:
            if session.last_summary_payload is not None:
                return {
                    "prior": False,
                    "summary": session.last_summary_payload,
                    "models": session.last_fits_payload,
                }
            config = session.config
            L = config.grid.n_levels
            summary, fits = posterior_summary_counts(
                config.grid, np.zeros(L, dtype=np.int64), np.zeros(L, dtype=np.int64),
                config.prior, config.quad, config.method,
            )
            return {
                "prior": True,
                "summary": summary_payload(summary),
                "models": [
                    {"tau": f.tau, "log_marginal": f.log_marginal,
                     "phi_hat": list(f.phi_hat), "phi_var": list(f.phi_var),
                     "exceed": list(f.exceed)} for f in fits
                ],
            }

    def events(self, trial_id: str) -> list[dict]:
        self._session(trial_id)  # ensures the id exists
        return _read_events(self._log_path(trial_id))


class _SeqConflict(Exception):
    def __init__(self, expected: int):
        self.expected = expected


def create_app(data_dir: str | None = None) -> FastAPI:
    data_dir = data_dir or os.environ.get("PLATEAU_DOSE_DATA_DIR", "./trial-data")
    store = TrialStore(data_dir)
    app = FastAPI(title="plateau-dose trial service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"],
    )
    app.state.store = store

    def _get(trial_id: str):
        try:
            return store.view(trial_id)
        except KeyError:
            raise HTTPException(404, detail={"code": "not_found",
                                             "message": f"no trial {trial_id}"})

    @app.post("/trials", status_code=201)
    def create_trial(body: CreateTrialIn):
        try:
            return store.create(body.config, body.seed)
        except ConfigurationError as exc:
            raise HTTPException(422, detail={"code": "invalid_config",
                                             "message": str(exc)})

    @app.get("/trials")
    def list_trials():
        return {"trials": [store.view(tid) for tid in store.list_ids()]}

    @app.get("/trials/{trial_id}")
    def get_trial(trial_id: str):
        return _get(trial_id)

    @app.post("/trials/{trial_id}/cohorts")
    def post_cohort(trial_id: str, body: CohortIn):
        _get(trial_id)
        try:
            return store.record_cohort(
                trial_id, body.seq,
                [{"activity": o.activity, "safety": o.safety} for o in body.outcomes],
            )
        except _SeqConflict as exc:
            raise HTTPException(409, detail={"code": "bad_seq",
                                             "message": "unexpected cohort sequence",
                                             "expected_seq": exc.expected})
        except TrialStateError as exc:
            raise HTTPException(409, detail={"code": "stopped", "message": str(exc)})
        except ConfigurationError as exc:
            raise HTTPException(422, detail={"code": "wrong_cohort_size",
                                             "message": str(exc)})

    @app.get("/trials/{trial_id}/posterior")
    def get_posterior(trial_id: str):
        _get(trial_id)
        return store.posterior(trial_id)

    @app.get("/trials/{trial_id}/events")
    def get_events(trial_id: str):
        _get(trial_id)
        return {"events": store.events(trial_id)}

    return app


def serve(addr: str | None = None, data_dir: str | None = None) -> None:
    """Run the service with uvicorn; address like 'host:port'."""
    import uvicorn

    addr = addr or os.environ.get("PLATEAU_DOSE_ADDR", "127.0.0.1:8732")
    host, _, port = addr.rpartition(":")
    uvicorn.run(create_app(data_dir), host=host or "127.0.0.1", port=int(port))

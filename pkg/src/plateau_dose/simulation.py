"""Scenario definitions, trial replication, and operating characteristics.

Outcomes are Bernoulli draws from per-level true activity and safety-issue
probabilities.  Each replicate gets an independent generator derived from
(master seed, replicate index), so results do not depend on worker count or
scheduling, and aggregation is a commutative reduction over replicates.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from multiprocessing import get_context

import numpy as np

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
)
from .errors import ConfigurationError, InferenceError
from .inference import posterior_summary_counts
from .models import Phase

__all__ = [
    "Scenario",
    "TrialResult",
    "OperatingCharacteristics",
    "builtin_scenarios",
    "paper_sample_sizes",
    "simulate_trial",
    "run_operating_characteristics",
]


@dataclass(frozen=True)
class Scenario:
    """True per-level activity and safety-issue probabilities."""

    name: str
    phi: tuple[float, ...]
    psi: tuple[float, ...]
    mad_truth: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "phi", tuple(float(v) for v in self.phi))
        object.__setattr__(self, "psi", tuple(float(v) for v in self.psi))
        if len(self.phi) != len(self.psi):
            raise ConfigurationError("phi and psi must have the same length")
        if any(not 0.0 <= v <= 1.0 for v in self.phi + self.psi):
            raise ConfigurationError("probabilities must lie in [0, 1]")
        if any(a > b for a, b in zip(self.psi, self.psi[1:])):
            warnings.warn("safety-issue probabilities are not non-decreasing",
                          stacklevel=2)
        if self.mad_truth is not None and not 1 <= self.mad_truth <= len(self.phi):
            raise ConfigurationError("mad_truth outside the dose range")


# Simulation study scenarios: activity vectors per number of levels, with
# the true target dose (None when no dose is acceptably active), and one
# safety vector per grid size.
_SCENARIO_PHI = {
    3: [
        ((0.50, 0.65, 0.80), 1),
        ((0.20, 0.35, 0.50), 3),
        ((0.05, 0.20, 0.35), None),
        ((0.35, 0.50, 0.65), 2),
        ((0.35, 0.50, 0.50), 2),
        ((0.50, 0.50, 0.50), 1),
        ((0.35, 0.35, 0.35), None),
        ((0.65, 0.65, 0.65), 1),
    ],
    4: [
        ((0.35, 0.50, 0.65, 0.80), 2),
        ((0.05, 0.20, 0.35, 0.50), 4),
        ((0.01, 0.05, 0.20, 0.35), None),
        ((0.20, 0.35, 0.50, 0.65), 3),
        ((0.20, 0.35, 0.50, 0.50), 3),
        ((0.35, 0.50, 0.50, 0.50), 2),
        ((0.20, 0.35, 0.35, 0.35), None),
        ((0.50, 0.65, 0.65, 0.65), 1),
    ],
    5: [
        ((0.35, 0.50, 0.65, 0.80, 0.95), 2),
        ((0.05, 0.20, 0.35, 0.50, 0.65), 4),
        ((0.01, 0.05, 0.15, 0.25, 0.35), None),
        ((0.20, 0.35, 0.50, 0.65, 0.80), 3),
        ((0.05, 0.20, 0.35, 0.50, 0.50), 4),
        ((0.35, 0.50, 0.50, 0.50, 0.50), 2),
        ((0.20, 0.35, 0.35, 0.35, 0.35), None),
        ((0.50, 0.65, 0.65, 0.65, 0.65), 1),
    ],
}
_SCENARIO_PSI = {
    3: (0.0005, 0.001, 0.002),
    4: (0.0, 0.0005, 0.001, 0.002),
    5: (0.0, 0.0005, 0.001, 0.002, 0.004),
}

# Maximum sample sizes studied per grid size.
_STUDY_N = {3: (18, 24, 30, 40), 4: (24, 30, 40), 5: (30, 40)}


def builtin_scenarios(n_levels: int) -> list[Scenario]:
    """The eight benchmark scenarios for a 3-, 4-, or 5-level grid."""
    if n_levels not in _SCENARIO_PHI:
        raise ConfigurationError(
            f"built-in scenarios exist for 3, 4, or 5 levels, not {n_levels}"
        )
    psi = _SCENARIO_PSI[n_levels]
    return [
        Scenario(name=f"scenario_{i}", phi=phi, psi=psi, mad_truth=mad)
        for i, (phi, mad) in enumerate(_SCENARIO_PHI[n_levels], start=1)
    ]


def paper_sample_sizes(n_levels: int) -> tuple[int, ...]:
    """Maximum sample sizes used in the benchmark study for this grid size."""
    if n_levels not in _STUDY_N:
        raise ConfigurationError(
            f"benchmark sample sizes exist for 3, 4, or 5 levels, not {n_levels}"
        )
    return _STUDY_N[n_levels]


@dataclass(frozen=True)
class TrialResult:
    """Outcome of one simulated trial."""

    selection: int | None
    stop_reason: str  # completed | stopped_futility | stopped_safety_exhausted
    alloc: tuple[int, ...]
    n_enrolled: int
    trace: tuple[dict, ...]


def _rng_for(seed, replicate: int | None = None) -> np.random.Generator:
    if isinstance(seed, np.random.SeedSequence):
        ss = seed
    elif replicate is None:
        ss = np.random.SeedSequence(seed)
    else:
        ss = np.random.SeedSequence(entropy=seed, spawn_key=(replicate,))
    return np.random.default_rng(ss)


def simulate_trial(scenario: Scenario, config: DesignConfig, seed,
                   collect_trace: bool = False) -> TrialResult:
    """Run one full trial against a scenario's true outcome probabilities.

    ``seed`` may be an integer or a ``numpy.random.SeedSequence``; one
    generator drives both subject outcomes and allocation randomisation,
    activity draws before safety draws within each cohort.
    """
    L = config.grid.n_levels
    if len(scenario.phi) != L:
        raise ConfigurationError(
            f"scenario has {len(scenario.phi)} levels but the grid has {L}"
        )
    rng = _rng_for(seed)
    phi = np.asarray(scenario.phi)
    psi = np.asarray(scenario.psi)

    trace: list[dict] = []
    seq = 0

    def emit(kind: str, payload: dict):
        nonlocal seq
        if collect_trace:
            trace.append(make_event(seq, kind, payload))
        seq += 1

    n_by = np.zeros(L, dtype=np.int64)
    y_by = np.zeros(L, dtype=np.int64)
    state = initial_state(config)

    def dose_cohort(level: int, size: int):
        acts = rng.random(size) < phi[level - 1]
        safs = rng.random(size) < psi[level - 1]
        n_by[level - 1] += size
        y_by[level - 1] += int(acts.sum())
        emit("cohort_dosed", {"level": level, "size": size,
                              "phase": state.phase.value})
        outcomes = list(zip(acts.tolist(), safs.tolist()))
        emit("outcomes_recorded", {
            "level": level,
            "outcomes": [{"activity": a, "safety": s} for a, s in outcomes],
        })
        return outcomes

    while state.phase is Phase.STARTUP:
        outcomes = dose_cohort(state.announced_level, state.announced_size)
        state = startup_step(state, config, outcomes)

    selection = None
    while state.phase is Phase.MODEL_BASED:
        summary, _ = posterior_summary_counts(
            config.grid, n_by, y_by, config.prior, config.quad, config.method
        )
        emit("refit_summary", summary_payload(summary))
        decision = recommend(state, summary, config, rng)
        emit("decision", decision_payload(decision))
        if decision.kind is DecisionKind.STOP_FUTILITY:
            state = mark_stopped(state, Phase.STOPPED_FUTILITY)
            emit("stop", {"reason": state.phase.value, "selected_level": None})
            break
        if decision.kind is DecisionKind.STOP_COMPLETE:
            selection = decision.level
            state = mark_stopped(state, Phase.COMPLETED)
            emit("stop", {"reason": state.phase.value, "selected_level": selection})
            break
        state = with_announced(state, decision.level, config.k_model)
        outcomes = dose_cohort(decision.level, config.k_model)
        state = record_model_cohort(state, config, outcomes)

    if state.phase is Phase.STOPPED_SAFETY_EXHAUSTED:
        emit("stop", {"reason": state.phase.value, "selected_level": None})

    return TrialResult(
        selection=selection,
        stop_reason=state.phase.value,
        alloc=tuple(int(v) for v in n_by),
        n_enrolled=int(n_by.sum()),
        trace=tuple(trace),
    )


@dataclass(frozen=True)
class OperatingCharacteristics:
    """Replicate-averaged behaviour of one design on one scenario."""

    scenario: str
    method: str
    n_levels: int
    n_max: int
    selection_pct: tuple[float, ...]
    mean_alloc: tuple[float, ...]
    early_termination_pct: float
    total_mean: float
    total_sd: float
    reps: int
    seed: int


_WORKER_ARGS = {}


def _pool_init(scenario, config, master_seed):
    _WORKER_ARGS["args"] = (scenario, config, master_seed)


def _run_replicate(rep: int):
    scenario, config, master_seed = _WORKER_ARGS["args"]
    result = _replicate(scenario, config, master_seed, rep)
    return rep, result.selection, result.alloc, result.n_enrolled


def _replicate(scenario, config, master_seed: int, rep: int) -> TrialResult:
    try:
        return simulate_trial(
            scenario, config,
            np.random.SeedSequence(entropy=master_seed, spawn_key=(rep,)),
        )
    except InferenceError as exc:
        exc.diagnostics.update(master_seed=master_seed, replicate=rep,
                               scenario=scenario.name)
        raise


def run_operating_characteristics(scenario: Scenario, config: DesignConfig,
                                  reps: int, master_seed: int,
                                  workers: int = 1) -> OperatingCharacteristics:
    """Aggregate ``reps`` independent replicates of one scenario.

    The per-replicate generators are spawned from the master seed by index,
    so the result is identical for any ``workers`` value.
    """
    if reps < 1:
        raise ConfigurationError("reps must be at least 1")
    L = config.grid.n_levels
    selections = np.full(reps, -1, dtype=np.int64)  # -1 = no selection
    allocs = np.zeros((reps, L), dtype=np.int64)
    totals = np.zeros(reps, dtype=np.int64)

    if workers <= 1:
        for rep in range(reps):
            result = _replicate(scenario, config, master_seed, rep)
            if result.selection is not None:
                selections[rep] = result.selection
            allocs[rep] = result.alloc
            totals[rep] = result.n_enrolled
    else:
        ctx = get_context("fork")
        with ctx.Pool(workers, initializer=_pool_init,
                      initargs=(scenario, config, master_seed)) as pool:
            for rep, sel, alloc, total in pool.imap_unordered(
                    _run_replicate, range(reps), chunksize=16):
                if sel is not None:
                    selections[rep] = sel
                allocs[rep] = alloc
                totals[rep] = total

    selection_pct = tuple(
        float(100.0 * np.mean(selections == lvl)) for lvl in range(1, L + 1)
    )
    early = float(100.0 * np.mean(selections == -1))
    total_sd = float(totals.std(ddof=1)) if reps > 1 else 0.0
    return OperatingCharacteristics(
        scenario=scenario.name,
        method=config.method.value,
        n_levels=L,
        n_max=config.n,
        selection_pct=selection_pct,
        mean_alloc=tuple(float(v) for v in allocs.mean(axis=0)),
        early_termination_pct=early,
        total_mean=float(totals.mean()),
        total_sd=total_sd,
        reps=reps,
        seed=master_seed,
    )

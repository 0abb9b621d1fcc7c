"""Two-stage trial state machine.

Stage 1 ("start-up") escalates one level per fully safe cohort from the
lowest dose.  The first safety issue, or reaching the top dose, hands over
to stage 2, the model-based phase: refit after every cohort, restrict to
admissible doses, aim at the current best estimate of the lowest dose whose
activity is closest to target, and randomise among near-tied plateau
candidates while enough budget remains.

States are immutable values; every transition returns a new state, so a
trial trace is fully determined by the design, the outcome stream, and the
allocation generator seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field, asdict
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import ConfigurationError, TrialStateError
from .inference import Method, PosteriorSummary, QuadratureConfig
from .models import DoseGrid, Phase, PriorSpec, SubjectRecord, default_prior

__all__ = [
    "DesignConfig",
    "TrialState",
    "DecisionKind",
    "RandomizationSet",
    "Rationale",
    "AllocationDecision",
    "startup_cohort_size",
    "initial_state",
    "startup_step",
    "with_announced",
    "record_model_cohort",
    "mark_stopped",
    "admissible_set",
    "estimate_mad",
    "randomization_set",
    "next_allocation",
    "final_selection",
    "recommend",
    "make_event",
    "summary_payload",
    "decision_payload",
]


def startup_cohort_size(n: int, n_levels: int, k_model: int) -> int:
    """Start-up cohort size so the dose grid and model phase tile the budget.

    Requires an even maximum sample size.  The result is forced even when
    the number of levels is odd and does not divide the budget.
    """
    if n % 2 != 0:
        raise ConfigurationError("maximum sample size n must be an even number")
    base = (n - k_model * n_levels) // n_levels
    if n % n_levels == 0 or n_levels % 2 == 0:
        k = base
    else:
        k = 2 * (base // 2)
    if k < 1:
        raise ConfigurationError(
            f"start-up cohort size came out {k}; the grid is too large for n={n}"
        )
    return k


@dataclass(frozen=True)
class DesignConfig:
    """Everything needed to run one trial."""

    grid: DoseGrid
    n: int
    k_model: int = 2
    c_f: float = 0.05
    s_base: float = 0.05
    method: Method = Method.SELECTION
    prior: PriorSpec | None = None
    quad: QuadratureConfig = field(default_factory=QuadratureConfig)

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        if self.prior is None:
            object.__setattr__(self, "prior", default_prior(self.grid))
        L = self.grid.n_levels
        if self.n < 2 * L:
            raise ConfigurationError(f"n must be at least {2 * L} for {L} levels")
        if self.k_model < 1:
            raise ConfigurationError("k_model must be at least 1")
        if not 0.0 < self.c_f < 1.0:
            raise ConfigurationError("c_f must lie in (0, 1)")
        if self.s_base < 0.0:
            raise ConfigurationError("s_base must be non-negative")
        if len(self.prior.model_prior) != L:
            raise ConfigurationError("model prior length must equal the number of levels")
        startup_cohort_size(self.n, L, self.k_model)  # validates n parity and size

    @property
    def k_start(self) -> int:
        return startup_cohort_size(self.n, self.grid.n_levels, self.k_model)


@dataclass(frozen=True)
class TrialState:
    """Immutable audit of one running trial."""

    subjects: tuple[SubjectRecord, ...]
    phase: Phase
    l_prime: int
    current_startup_level: int
    announced_level: int | None
    announced_size: int | None
    cohorts_recorded: int

    @property
    def n_enrolled(self) -> int:
        return len(self.subjects)

    def alloc_by_level(self, n_levels: int) -> tuple[int, ...]:
        counts = [0] * n_levels
        for rec in self.subjects:
            counts[rec.dose_level - 1] += 1
        return tuple(counts)

    def activity_counts(self, n_levels: int) -> tuple[np.ndarray, np.ndarray]:
        n = np.zeros(n_levels, dtype=np.int64)
        y = np.zeros(n_levels, dtype=np.int64)
        for rec in self.subjects:
            n[rec.dose_level - 1] += 1
            if rec.activity:
                y[rec.dose_level - 1] += 1
        return n, y


def initial_state(config: DesignConfig) -> TrialState:
    """Fresh trial: first start-up cohort announced at the lowest level."""
    return TrialState(
        subjects=(),
        phase=Phase.STARTUP,
        l_prime=config.grid.n_levels,
        current_startup_level=1,
        announced_level=1,
        announced_size=config.k_start,
        cohorts_recorded=0,
    )


def _as_outcome_pairs(outcomes: Iterable) -> list[tuple[bool, bool]]:
    pairs = []
    for item in outcomes:
        if isinstance(item, dict):
            pairs.append((bool(item["activity"]), bool(item["safety"])))
        else:
            act, saf = item
            pairs.append((bool(act), bool(saf)))
    return pairs


def startup_step(state: TrialState, config: DesignConfig, outcomes) -> TrialState:
    """Record one start-up cohort and escalate, hand over, or stop.

    Any safety issue eliminates the current level and all above it; if that
    leaves no dose, the trial stops with no selectable dose.
    """
    if state.phase is not Phase.STARTUP:
        raise TrialStateError(f"startup_step called in phase {state.phase.value}")
    pairs = _as_outcome_pairs(outcomes)
    if len(pairs) != state.announced_size:
        raise TrialStateError(
            f"expected {state.announced_size} outcomes, got {len(pairs)}"
        )
    level = state.current_startup_level
    records = tuple(
        SubjectRecord(level, act, saf, state.cohorts_recorded, Phase.STARTUP)
        for act, saf in pairs
    )
    subjects = state.subjects + records
    any_safety = any(saf for _, saf in pairs)
    L = config.grid.n_levels

    if any_safety:
        l_prime = level - 1
        phase = Phase.STOPPED_SAFETY_EXHAUSTED if l_prime == 0 else Phase.MODEL_BASED
        return TrialState(subjects, phase, l_prime, level, None, None,
                          state.cohorts_recorded + 1)
    if level == L:
        return TrialState(subjects, Phase.MODEL_BASED, state.l_prime, level,
                          None, None, state.cohorts_recorded + 1)
    return TrialState(subjects, Phase.STARTUP, state.l_prime, level + 1,
                      level + 1, config.k_start, state.cohorts_recorded + 1)


def with_announced(state: TrialState, level: int, size: int) -> TrialState:
    """Announce the next model-phase cohort at a decided level."""
    if state.phase is not Phase.MODEL_BASED:
        raise TrialStateError(f"cannot announce a cohort in phase {state.phase.value}")
    if not 1 <= level <= state.l_prime:
        raise TrialStateError(f"level {level} is outside the safe range 1..{state.l_prime}")
    return TrialState(state.subjects, state.phase, state.l_prime,
                      state.current_startup_level, level, size,
                      state.cohorts_recorded)


def record_model_cohort(state: TrialState, config: DesignConfig, outcomes) -> TrialState:
    """Record outcomes of the announced model-phase cohort.

    A safety issue at level l eliminates l and everything above it for all
    later decisions.
    """
    if state.phase is not Phase.MODEL_BASED:
        raise TrialStateError(f"record_model_cohort called in phase {state.phase.value}")
    if state.announced_level is None:
        raise TrialStateError("no cohort has been announced")
    pairs = _as_outcome_pairs(outcomes)
    if len(pairs) != state.announced_size:
        raise TrialStateError(
            f"expected {state.announced_size} outcomes, got {len(pairs)}"
        )
    level = state.announced_level
    records = tuple(
        SubjectRecord(level, act, saf, state.cohorts_recorded, Phase.MODEL_BASED)
        for act, saf in pairs
    )
    subjects = state.subjects + records
    l_prime = state.l_prime
    phase = state.phase
    if any(saf for _, saf in pairs):
        l_prime = min(l_prime, level - 1)
        if l_prime == 0:
            phase = Phase.STOPPED_SAFETY_EXHAUSTED
    return TrialState(subjects, phase, l_prime, state.current_startup_level,
                      None, None, state.cohorts_recorded + 1)


def mark_stopped(state: TrialState, phase: Phase) -> TrialState:
    if phase not in (Phase.STOPPED_FUTILITY, Phase.COMPLETED):
        raise TrialStateError(f"cannot mark a trial as {phase.value}")
    return TrialState(state.subjects, phase, state.l_prime,
                      state.current_startup_level, None, None,
                      state.cohorts_recorded)


class DecisionKind(str, Enum):
    ADMINISTER = "administer"
    STOP_FUTILITY = "stop_futility"
    STOP_COMPLETE = "stop_complete"


@dataclass(frozen=True)
class RandomizationSet:
    """Near-tied plateau candidates with their renormalised probabilities."""

    levels: tuple[int, ...]
    weights: tuple[float, ...]
    s: float


@dataclass(frozen=True)
class Rationale:
    """Every intermediate quantity behind one allocation decision."""

    pi: tuple[float, ...]
    tau_hat: int
    mad_level: int
    admissible: tuple[int, ...]
    s: float | None = None
    randomization_levels: tuple[int, ...] | None = None
    randomization_weights: tuple[float, ...] | None = None
    drawn_level: int | None = None


@dataclass(frozen=True)
class AllocationDecision:
    kind: DecisionKind
    level: int | None
    rationale: Rationale


def admissible_set(summary: PosteriorSummary, l_prime: int, c_f: float) -> tuple[int, ...]:
    """Doses within the safe range whose exceedance clears the futility bar."""
    return tuple(l for l in range(1, l_prime + 1) if summary.exceed[l - 1] >= c_f)


def estimate_mad(summary: PosteriorSummary, target: float) -> int:
    """Level whose estimated activity is closest to target; ties go low."""
    diffs = [abs(p - target) for p in summary.phi]
    return int(np.argmin(diffs)) + 1


def randomization_set(pi: Sequence[float], n_enrolled: int, n_max: int,
                      s_base: float) -> RandomizationSet:
    """Levels whose plateau probability is within a shrinking margin of the
    best one, weighted proportionally.

    The margin is ``s_base * (1 - N/n)``: wide early, zero at full
    enrollment, so randomisation fades out as information accrues.
    """
    s = s_base * (1.0 - n_enrolled / n_max)
    top = max(pi)
    levels = tuple(l for l, p in enumerate(pi, start=1) if top - p <= s)
    mass = sum(pi[l - 1] for l in levels)
    weights = tuple(pi[l - 1] / mass for l in levels)
    return RandomizationSet(levels=levels, weights=weights, s=s)


def _nearest_level(candidates: Sequence[int], target: int) -> int:
    return min(candidates, key=lambda l: (abs(l - target), l))


def next_allocation(state: TrialState, summary: PosteriorSummary,
                    config: DesignConfig, rng: np.random.Generator) -> AllocationDecision:
    """Decide the next cohort's dose, or stop for futility.

    With a plateau estimated strictly above the target estimate the choice
    is deterministic: the admissible level nearest the target estimate.
    Otherwise the level is randomised among near-tied plateau candidates,
    falling back to the nearest admissible level when the draw is not
    admissible.
    """
    if state.phase is not Phase.MODEL_BASED:
        raise TrialStateError(f"allocation requested in phase {state.phase.value}")
    if state.n_enrolled + config.k_model > config.n:
        raise TrialStateError("not enough budget left for a full cohort")

    adm = admissible_set(summary, state.l_prime, config.c_f)
    mad = estimate_mad(summary, config.grid.target)
    if not adm:
        rationale = Rationale(pi=summary.pi, tau_hat=summary.tau_hat,
                              mad_level=mad, admissible=adm)
        return AllocationDecision(DecisionKind.STOP_FUTILITY, None, rationale)

    if summary.tau_hat > mad:
        level = _nearest_level(adm, mad)
        rationale = Rationale(pi=summary.pi, tau_hat=summary.tau_hat,
                              mad_level=mad, admissible=adm)
        return AllocationDecision(DecisionKind.ADMINISTER, level, rationale)

    rset = randomization_set(summary.pi, state.n_enrolled, config.n, config.s_base)
    weights = np.asarray(rset.weights)
    drawn = int(rng.choice(np.asarray(rset.levels), p=weights / weights.sum()))
    level = drawn if drawn in adm else _nearest_level(adm, drawn)
    rationale = Rationale(
        pi=summary.pi, tau_hat=summary.tau_hat, mad_level=mad, admissible=adm,
        s=rset.s, randomization_levels=rset.levels,
        randomization_weights=rset.weights, drawn_level=drawn,
    )
    return AllocationDecision(DecisionKind.ADMINISTER, level, rationale)


def final_selection(state: TrialState, summary: PosteriorSummary,
                    config: DesignConfig) -> int | None:
    """Lowest admissible dose whose activity estimate is closest to target;
    ``None`` when nothing is admissible.

    Closeness is ranked on the summary's selection curve, which under
    model averaging is the mixture flattened at the most probable plateau
    level (the raw mixture never flattens and would always favour the top
    of the grid when every estimate sits below target).
    """
    adm = admissible_set(summary, state.l_prime, config.c_f)
    if not adm:
        return None
    target = config.grid.target
    curve = summary.selection_curve
    return min(adm, key=lambda l: (abs(curve[l - 1] - target), l))


def recommend(state: TrialState, summary: PosteriorSummary, config: DesignConfig,
              rng: np.random.Generator) -> AllocationDecision:
    """Post-refit decision: stop for futility, administer, or wrap up.

    The futility gate applies at every refit including the last one; a
    completed trial therefore always carries a selected dose.
    """
    if state.phase is not Phase.MODEL_BASED:
        raise TrialStateError(f"recommendation requested in phase {state.phase.value}")
    adm = admissible_set(summary, state.l_prime, config.c_f)
    mad = estimate_mad(summary, config.grid.target)
    if not adm:
        rationale = Rationale(pi=summary.pi, tau_hat=summary.tau_hat,
                              mad_level=mad, admissible=adm)
        return AllocationDecision(DecisionKind.STOP_FUTILITY, None, rationale)
    if state.n_enrolled + config.k_model <= config.n:
        return next_allocation(state, summary, config, rng)
    level = final_selection(state, summary, config)
    rationale = Rationale(pi=summary.pi, tau_hat=summary.tau_hat,
                          mad_level=mad, admissible=adm)
    return AllocationDecision(DecisionKind.STOP_COMPLETE, level, rationale)


# --- event-log records -----------------------------------------------------
#
# One trial trace is a sequence of {seq, timestamp, kind, payload} records;
# kinds: cohort_dosed, outcomes_recorded, refit_summary, decision, stop.
# Simulated traces carry a null timestamp so replicates stay bit-identical.


def make_event(seq: int, kind: str, payload: dict, timestamp: float | None = None) -> dict:
    return {"seq": seq, "timestamp": timestamp, "kind": kind, "payload": payload}


def summary_payload(summary: PosteriorSummary) -> dict:
    return {
        "method": summary.method.value,
        "pi": list(summary.pi),
        "tau_hat": summary.tau_hat,
        "phi": list(summary.phi),
        "var": list(summary.var),
        "exceed": list(summary.exceed),
        "selection_phi": (None if summary.selection_phi is None
                          else list(summary.selection_phi)),
    }


def decision_payload(decision: AllocationDecision) -> dict:
    rationale = asdict(decision.rationale)
    for key, value in rationale.items():
        if isinstance(value, tuple):
            rationale[key] = list(value)
    return {
        "kind": decision.kind.value,
        "level": decision.level,
        "rationale": rationale,
    }

"""Dose-activity model family, priors, and elementary likelihood math.

The activity curve is an increasing logistic in log dose ratio that may
flatten at one of the tested dose levels ("plateau").  A family of L
candidate models is indexed by the plateau level tau:

* tau = 1: the activity probability is constant, ``expit(gamma0)``.
* tau >= 2: ``expit(gamma0 + gamma1 * log(d_min(level, tau) / d_ref))``,
  i.e. the curve rises with dose below tau and is flat at and above it.

``gamma1 > 0`` so the curve is non-decreasing in dose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import ConfigurationError

__all__ = [
    "DoseGrid",
    "ParamPoint",
    "PlateauModel",
    "PriorSpec",
    "Phase",
    "SubjectRecord",
    "logit",
    "inv_logit",
    "link_logit",
    "activity_prob",
    "log_likelihood",
    "default_prior",
    "counts_by_level",
]


def logit(p: float) -> float:
    return math.log(p / (1.0 - p))


def inv_logit(x: float) -> float:
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


@dataclass(frozen=True)
class DoseGrid:
    """The ordered dose set, reference dose, target rate, and initial guesses.

    Attributes:
        levels: strictly increasing positive dose values; by convention the
            value of level k is simply k unless real doses are supplied.
        ref_level: 1-based index of the reference dose, the dose initially
            guessed to have activity probability equal to ``target``.
        target: target activity rate in (0, 1).
        initial_guesses: strictly increasing prior guesses of the activity
            probability at each level.
    """

    levels: tuple[float, ...]
    ref_level: int
    target: float
    initial_guesses: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(float(v) for v in self.levels))
        object.__setattr__(
            self, "initial_guesses", tuple(float(v) for v in self.initial_guesses)
        )
        L = len(self.levels)
        if not 2 <= L <= 8:
            raise ConfigurationError(f"number of dose levels must be in [2, 8], got {L}")
        if any(v <= 0 for v in self.levels):
            raise ConfigurationError("dose values must be positive")
        if any(a >= b for a, b in zip(self.levels, self.levels[1:])):
            raise ConfigurationError("dose values must be strictly increasing")
        if len(self.initial_guesses) != L:
            raise ConfigurationError("initial_guesses must have one entry per level")
        if any(not 0.0 < g < 1.0 for g in self.initial_guesses):
            raise ConfigurationError("initial guesses must lie in (0, 1)")
        if any(a >= b for a, b in zip(self.initial_guesses, self.initial_guesses[1:])):
            raise ConfigurationError("initial guesses must be strictly increasing")
        if not 0.0 < self.target < 1.0:
            raise ConfigurationError("target must lie in (0, 1)")
        if not 1 <= self.ref_level <= L:
            raise ConfigurationError(f"ref_level must be in [1, {L}]")

    @property
    def n_levels(self) -> int:
        return len(self.levels)

    @property
    def ref_dose(self) -> float:
        return self.levels[self.ref_level - 1]

    def log_ratio(self, level: int) -> float:
        """log(d_level / d_ref)."""
        return math.log(self.levels[level - 1] / self.ref_dose)

    @classmethod
    def default(cls, n_levels: int, target: float, initial_guesses: Sequence[float],
                ref_level: int | None = None) -> "DoseGrid":
        """Grid with dose values 1..L; reference defaults to the lowest level
        whose initial guess matches the target (closest guess if none match)."""
        guesses = tuple(float(g) for g in initial_guesses)
        if ref_level is None:
            exact = [k for k, g in enumerate(guesses, start=1)
                     if abs(g - target) < 1e-12]
            if exact:
                ref_level = exact[0]
            else:
                ref_level = min(range(1, n_levels + 1),
                                key=lambda k: (abs(guesses[k - 1] - target), k))
        return cls(
            levels=tuple(float(k) for k in range(1, n_levels + 1)),
            ref_level=ref_level,
            target=target,
            initial_guesses=guesses,
        )


@dataclass(frozen=True)
class ParamPoint:
    """One point of the (intercept, slope) parameter space; slope > 0."""

    gamma0: float
    gamma1: float

    def __post_init__(self):
        if not self.gamma1 > 0:
            raise ConfigurationError("gamma1 must be strictly positive")


@dataclass(frozen=True)
class PlateauModel:
    """Candidate dose-activity model: plateau level tau on a dose grid."""

    tau: int
    grid: DoseGrid

    def __post_init__(self):
        if not 1 <= self.tau <= self.grid.n_levels:
            raise ConfigurationError(
                f"tau must be in [1, {self.grid.n_levels}], got {self.tau}"
            )

    def log_ratios(self) -> np.ndarray:
        """Effective log dose ratio per level (0 for tau = 1, clamped at tau)."""
        L = self.grid.n_levels
        if self.tau == 1:
            return np.zeros(L)
        return np.array(
            [self.grid.log_ratio(min(level, self.tau)) for level in range(1, L + 1)]
        )


class Phase(str, Enum):
    STARTUP = "startup"
    MODEL_BASED = "model_based"
    STOPPED_FUTILITY = "stopped_futility"
    STOPPED_SAFETY_EXHAUSTED = "stopped_safety_exhausted"
    COMPLETED = "completed"


@dataclass(frozen=True)
class SubjectRecord:
    """One volunteer: dose level given, binary activity, binary safety issue."""

    dose_level: int
    activity: bool
    safety_issue: bool
    cohort_index: int
    phase: Phase = Phase.STARTUP

    def __post_init__(self):
        if self.dose_level < 1:
            raise ConfigurationError("dose_level must be >= 1")
        if self.cohort_index < 0:
            raise ConfigurationError("cohort_index must be >= 0")


@dataclass(frozen=True)
class PriorSpec:
    """Priors: normal intercept, gamma slope (parameterised by mean), and
    model probabilities over the plateau level."""

    gamma0_mean: float
    gamma0_sd: float
    gamma1_shape: float
    gamma1_mean: float
    model_prior: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "model_prior", tuple(float(p) for p in self.model_prior))
        if not self.gamma0_sd > 0:
            raise ConfigurationError("gamma0_sd must be positive")
        if not self.gamma1_shape > 0:
            raise ConfigurationError("gamma1_shape must be positive")
        if not self.gamma1_mean > 0:
            raise ConfigurationError("gamma1_mean must be positive")
        if any(p < 0 for p in self.model_prior):
            raise ConfigurationError("model prior probabilities must be >= 0")
        if abs(sum(self.model_prior) - 1.0) > 1e-12:
            raise ConfigurationError("model prior must sum to 1 within 1e-12")

    @property
    def gamma1_rate(self) -> float:
        """Rate of the gamma prior on the slope (shape / mean)."""
        return self.gamma1_shape / self.gamma1_mean


def link_logit(model: PlateauModel, p: ParamPoint, level: int) -> float:
    """Linear predictor (logit of activity probability) at a dose level.

    Constant in ``level`` for every level at or above the plateau; exactly
    ``gamma0`` for the flat model tau = 1.
    """
    L = model.grid.n_levels
    if not 1 <= level <= L:
        raise ValueError(f"level must be in [1, {L}], got {level}")
    if model.tau == 1:
        return p.gamma0
    eff = min(level, model.tau)
    return p.gamma0 + p.gamma1 * model.grid.log_ratio(eff)


def activity_prob(model: PlateauModel, p: ParamPoint, level: int) -> float:
    """Probability of activity at a dose level; always strictly in (0, 1)."""
    return inv_logit(link_logit(model, p, level))


def log_likelihood(model: PlateauModel, p: ParamPoint,
                   data: Sequence[SubjectRecord]) -> float:
    """Bernoulli log likelihood of the observed activity responses."""
    total = 0.0
    for rec in data:
        phi = activity_prob(model, p, rec.dose_level)
        total += math.log(phi) if rec.activity else math.log1p(-phi)
    return total


def counts_by_level(data: Sequence[SubjectRecord], n_levels: int) -> tuple[np.ndarray, np.ndarray]:
    """Sufficient statistics: (trials, activity successes) per dose level."""
    n = np.zeros(n_levels, dtype=np.int64)
    y = np.zeros(n_levels, dtype=np.int64)
    for rec in data:
        n[rec.dose_level - 1] += 1
        if rec.activity:
            y[rec.dose_level - 1] += 1
    return n, y


#: Published default hyperparameters for the intercept and slope priors.
DEFAULT_GAMMA0_SD = 2.0
DEFAULT_GAMMA1_SHAPE = 5.0


def default_prior(grid: DoseGrid) -> PriorSpec:
    """Construct the default prior from the grid.

    The intercept prior is centred at the logit of the target rate.  The
    slope prior mean is chosen so that the no-plateau curve passes through a
    second anchor point taken from the initial guesses: the guess at level 2
    when the reference dose is the first or last level, and the guess at
    level 1 otherwise.
    """
    g0_mean = logit(grid.target)
    L = grid.n_levels
    if grid.ref_level in (1, L):
        anchor_level, anchor_guess = 2, grid.initial_guesses[1]
    else:
        anchor_level, anchor_guess = 1, grid.initial_guesses[0]
    denom = math.log(grid.levels[anchor_level - 1] / grid.ref_dose)
    if abs(denom) < 1e-12:
        raise ConfigurationError(
            "cannot derive a slope prior mean: the anchor dose equals the "
            "reference dose; supply an explicit PriorSpec"
        )
    g1_mean = (logit(anchor_guess) - g0_mean) / denom
    if not g1_mean > 0:
        raise ConfigurationError(
            "derived slope prior mean is not positive; supply an explicit PriorSpec"
        )
    return PriorSpec(
        gamma0_mean=g0_mean,
        gamma0_sd=DEFAULT_GAMMA0_SD,
        gamma1_shape=DEFAULT_GAMMA1_SHAPE,
        gamma1_mean=g1_mean,
        model_prior=tuple([1.0 / L] * L),
    )

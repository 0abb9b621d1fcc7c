"""Two-stage Bayesian dose-finding with a plateau-aware activity model.

The package finds, under safety constraints, the lowest dose whose
activity probability is closest to a target: a start-up escalation stage
followed by model-based allocation over a family of change-point logistic
curves, combined by model selection or model averaging, with a plain
logistic comparator.
"""

from .design import (
    AllocationDecision,
    DecisionKind,
    DesignConfig,
    Rationale,
    TrialState,
    admissible_set,
    estimate_mad,
    final_selection,
    initial_state,
    next_allocation,
    randomization_set,
    recommend,
    startup_cohort_size,
    startup_step,
)
from .errors import ConfigurationError, InferenceError, TrialStateError
from .inference import (
    Method,
    ModelFit,
    PosteriorSummary,
    QuadratureConfig,
    combine_bma,
    combine_selection,
    fit_all_models,
    fit_blrm,
    fit_model,
    model_posterior,
    posterior_summary,
)
from .mh import MHFit, mh_oracle
from .models import (
    DoseGrid,
    ParamPoint,
    Phase,
    PlateauModel,
    PriorSpec,
    SubjectRecord,
    activity_prob,
    default_prior,
    link_logit,
    log_likelihood,
)
from .simulation import (
    OperatingCharacteristics,
    Scenario,
    TrialResult,
    builtin_scenarios,
    paper_sample_sizes,
    run_operating_characteristics,
    simulate_trial,
)

__version__ = "0.1.0"

__all__ = [
    "AllocationDecision", "DecisionKind", "DesignConfig", "Rationale",
    "TrialState", "admissible_set", "estimate_mad", "final_selection",
    "initial_state", "next_allocation", "randomization_set", "recommend",
    "startup_cohort_size", "startup_step",
    "ConfigurationError", "InferenceError", "TrialStateError",
    "Method", "ModelFit", "PosteriorSummary", "QuadratureConfig",
    "combine_bma", "combine_selection", "fit_all_models", "fit_blrm",
    "fit_model", "model_posterior", "posterior_summary",
    "MHFit", "mh_oracle",
    "DoseGrid", "ParamPoint", "Phase", "PlateauModel", "PriorSpec",
    "SubjectRecord", "activity_prob", "default_prior", "link_logit",
    "log_likelihood",
    "OperatingCharacteristics", "Scenario", "TrialResult",
    "builtin_scenarios", "paper_sample_sizes",
    "run_operating_characteristics", "simulate_trial",
    "__version__",
]

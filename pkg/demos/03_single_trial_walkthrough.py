"""Drive one trial by hand through the state machine, event by event.

The start-up stage escalates fully-safe cohorts from the lowest dose; the
model-based stage then refits after every cohort and either administers,
stops for futility, or completes with a selected dose.
"""

import numpy as np

from plateau_dose import DesignConfig, DoseGrid, simulate_trial
from plateau_dose.simulation import Scenario

grid = DoseGrid.default(3, 0.5, (0.5, 0.65, 0.8))
config = DesignConfig(grid=grid, n=24, k_model=2, method="selection")
print(f"design: n={config.n}, start-up cohorts of {config.k_start}, "
      f"model-phase cohorts of {config.k_model}")

scenario = Scenario("plateau_at_2", phi=(0.35, 0.5, 0.5), psi=(0.0, 0.001, 0.002))
result = simulate_trial(scenario, config, seed=20240517, collect_trace=True)

for ev in result.trace:
    kind, p = ev["kind"], ev["payload"]
    if kind == "cohort_dosed":
        print(f"[{ev['seq']:2d}] dose cohort of {p['size']} at level {p['level']} "
              f"({p['phase']})")
    elif kind == "outcomes_recorded":
        acts = sum(o["activity"] for o in p["outcomes"])
        safs = sum(o["safety"] for o in p["outcomes"])
        print(f"[{ev['seq']:2d}]   outcomes: {acts}/{len(p['outcomes'])} active"
              + (f", {safs} safety issue(s)" if safs else ""))
    elif kind == "refit_summary":
        print(f"[{ev['seq']:2d}]   refit: pi={np.round(p['pi'], 2)} "
              f"tau_hat={p['tau_hat']} phi={np.round(p['phi'], 2)}")
    elif kind == "decision":
        r = p["rationale"]
        extra = ""
        if r["randomization_levels"]:
            extra = (f" randomized over {r['randomization_levels']} "
                     f"(drew {r['drawn_level']})")
        print(f"[{ev['seq']:2d}]   decision: {p['kind']} level={p['level']} "
              f"(mad={r['mad_level']}, admissible={r['admissible']}){extra}")
    elif kind == "stop":
        print(f"[{ev['seq']:2d}] stop: {p['reason']}, "
              f"selected level = {p['selected_level']}")

print(f"\nfinal: selection={result.selection}, reason={result.stop_reason}, "
      f"allocation by level={result.alloc}, total={result.n_enrolled}")

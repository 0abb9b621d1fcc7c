"""Reproduce a slice of the benchmark operating characteristics.

Runs the eight built-in scenarios on the 3-level grid for all three
methods at a reduced replicate count and prints the benchmark-style
table.  Increase ``REPS`` to 1000 to match the published study.
"""

from plateau_dose import DesignConfig, builtin_scenarios, run_operating_characteristics
from plateau_dose.cli import default_grid
from plateau_dose.report import format_report

REPS = 250
N_MAX = 18

grid = default_grid(3)
results = []
for method in ("selection", "bma", "blrm"):
    config = DesignConfig(grid=grid, n=N_MAX, method=method)
    for scenario in builtin_scenarios(3):
        oc = run_operating_characteristics(scenario, config, reps=REPS,
                                           master_seed=7, workers=2)
        results.append(oc)
    print(f"{method}: done ({len(builtin_scenarios(3))} scenarios x {REPS} reps)")

print()
print(format_report(results))
print("cells read 'selection% (mean volunteers allocated)'.")

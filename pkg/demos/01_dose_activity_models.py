"""Walk through the dose-activity model family.

The activity curve rises logistically with log dose ratio and may flatten
("plateau") at one of the tested levels.  One candidate model per level:
under the first, activity is the same at every dose; under the last, the
curve never flattens inside the grid.
"""

import numpy as np

from plateau_dose import DoseGrid, ParamPoint, PlateauModel, activity_prob, default_prior

grid = DoseGrid.default(3, target=0.5, initial_guesses=(0.5, 0.65, 0.8))
print(f"dose grid: {grid.levels}, reference level {grid.ref_level}, "
      f"target rate {grid.target}")

params = ParamPoint(gamma0=0.0, gamma1=1.2)
print(f"\nactivity probabilities at gamma0={params.gamma0}, gamma1={params.gamma1}:")
print(f"{'tau':>4} " + " ".join(f"dose {l}".rjust(8) for l in (1, 2, 3)))
for tau in (1, 2, 3):
    model = PlateauModel(tau, grid)
    probs = [activity_prob(model, params, lvl) for lvl in (1, 2, 3)]
    print(f"{tau:>4} " + " ".join(f"{p:8.4f}" for p in probs))
print("note how the curve freezes at and above its plateau level.")

prior = default_prior(grid)
print(f"\ndefault prior: gamma0 ~ N({prior.gamma0_mean:.3f}, {prior.gamma0_sd}^2), "
      f"gamma1 ~ Gamma(shape={prior.gamma1_shape}, mean={prior.gamma1_mean:.4f})")
print("the slope mean is chosen so the no-plateau curve passes through the")
print("second initial guess; the intercept is centred at logit(target).")

# prior predictive activity per dose under each model, by simple Monte Carlo
rng = np.random.default_rng(0)
g0 = rng.normal(prior.gamma0_mean, prior.gamma0_sd, 20_000)
g1 = rng.gamma(prior.gamma1_shape, prior.gamma1_mean / prior.gamma1_shape, 20_000)
print("\nprior predictive mean activity (Monte Carlo):")
for tau in (1, 2, 3):
    model = PlateauModel(tau, grid)
    cols = []
    for lvl in (1, 2, 3):
        c = model.log_ratios()[lvl - 1]
        cols.append(float(np.mean(1.0 / (1.0 + np.exp(-(g0 + g1 * c))))))
    print(f"  tau={tau}: " + " ".join(f"{v:.3f}" for v in cols))

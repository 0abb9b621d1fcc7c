"""Random-walk Metropolis sampler used as an independent check on the
deterministic integrator.

The walk moves in (intercept, log slope).  Proposal scales adapt toward a
~30% acceptance rate during burn-in only, so the sampling phase is a valid
fixed-kernel chain.  Everything is driven by a single seeded generator and
is bit-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .models import PlateauModel, PriorSpec, SubjectRecord, counts_by_level

__all__ = ["MHFit", "mh_oracle"]

_TARGET_ACCEPT = 0.3
_ADAPT_WINDOW = 100


@dataclass(frozen=True)
class MHFit:
    """Sample-based posterior summaries with Monte Carlo standard errors."""

    tau: int
    phi_hat: tuple[float, ...]
    phi_mcse: tuple[float, ...]
    phi_var: tuple[float, ...]
    exceed: tuple[float, ...]
    exceed_mcse: tuple[float, ...]
    acceptance_rate: float
    draws: int
    seed: int
    warning: str | None = None


def _softplus(x: float) -> float:
    return math.log1p(math.exp(-abs(x))) + max(x, 0.0)


def mh_oracle(model: PlateauModel, data: Sequence[SubjectRecord], prior: PriorSpec,
              draws: int = 200_000, seed: int = 0, burn: int | None = None) -> MHFit:
    """Sample the posterior of one plateau model and summarise it.

    Args:
        model: the plateau model to fit.
        data: subject records (may be empty, yielding the prior).
        prior: prior specification.
        draws: post-burn-in draws, at least 10_000.
        seed: generator seed; the output is a pure function of all inputs.
        burn: adaptation/burn-in iterations (default ``max(2000, draws // 10)``).
    """
    if draws < 10_000:
        raise ValueError("draws must be at least 10_000")
    if burn is None:
        burn = max(2000, draws // 10)

    grid = model.grid
    L = grid.n_levels
    tau = model.tau
    n_lv, y_lv = counts_by_level(data, L)
    if tau == 1:
        level_map = np.zeros(L, dtype=int)
        c_vals = [0.0]
    else:
        level_map = np.array([min(l, tau) - 1 for l in range(1, L + 1)])
        c_vals = [grid.log_ratio(l) for l in range(1, tau + 1)]
    C = len(c_vals)
    nc = [0.0] * C
    yc = [0.0] * C
    for l in range(L):
        nc[level_map[l]] += float(n_lv[l])
        yc[level_map[l]] += float(y_lv[l])
    flat = tau == 1

    mean0, sd0 = prior.gamma0_mean, prior.gamma0_sd
    shape, rate = prior.gamma1_shape, prior.gamma1_rate
    logit_target = math.log(grid.target / (1.0 - grid.target))

    def log_post(g0: float, u: float) -> float:
        g1 = math.exp(u)
        lp = -0.5 * ((g0 - mean0) / sd0) ** 2
        lp += shape * u - rate * g1  # gamma prior in log space, constants dropped
        for ci in range(C):
            eta = g0 if flat else g0 + g1 * c_vals[ci]
            lp += -yc[ci] * _softplus(-eta) - (nc[ci] - yc[ci]) * _softplus(eta)
        return lp

    rng = np.random.default_rng(seed)
    total = burn + draws
    steps = rng.standard_normal((total, 2))
    unif = rng.random(total)

    g0 = mean0
    u = math.log(prior.gamma1_mean)
    lp = log_post(g0, u)
    s0, s1 = 1.0, 0.5
    window_acc = 0
    accepted = 0

    n_batches = 50
    batch_size = draws // n_batches
    usable = n_batches * batch_size

    sum_phi = [0.0] * C
    sum_phi2 = [0.0] * C
    sum_exc = [0.0] * C
    batch_phi = np.zeros((n_batches, C))
    batch_exc = np.zeros((n_batches, C))

    for t in range(total):
        cand0 = g0 + s0 * steps[t, 0]
        cand1 = u + s1 * steps[t, 1]
        cand_lp = log_post(cand0, cand1)
        if cand_lp - lp > math.log(unif[t]):
            g0, u, lp = cand0, cand1, cand_lp
            if t >= burn:
                accepted += 1
            else:
                window_acc += 1
        if t < burn:
            if (t + 1) % _ADAPT_WINDOW == 0:
                rate_w = window_acc / _ADAPT_WINDOW
                factor = math.exp(rate_w - _TARGET_ACCEPT)
                s0 *= factor
                s1 *= factor
                window_acc = 0
            continue

        i = t - burn
        if i >= usable:
            continue
        g1 = math.exp(u)
        b = i // batch_size
        for ci in range(C):
            eta = g0 if flat else g0 + g1 * c_vals[ci]
            phi = 1.0 / (1.0 + math.exp(-eta)) if eta >= 0 else math.exp(eta) / (1.0 + math.exp(eta))
            sum_phi[ci] += phi
            sum_phi2[ci] += phi * phi
            hit = 1.0 if eta > logit_target else 0.0
            sum_exc[ci] += hit
            batch_phi[b, ci] += phi
            batch_exc[b, ci] += hit

    acc_rate = accepted / draws
    phi_c = np.array(sum_phi) / usable
    var_c = np.maximum(np.array(sum_phi2) / usable - phi_c**2, 0.0)
    exc_c = np.array(sum_exc) / usable
    batch_phi /= batch_size
    batch_exc /= batch_size
    mcse_phi = batch_phi.std(axis=0, ddof=1) / math.sqrt(n_batches)
    mcse_exc = batch_exc.std(axis=0, ddof=1) / math.sqrt(n_batches)

    warning = None
    if not 0.05 <= acc_rate <= 0.95:
        warning = f"acceptance rate {acc_rate:.3f} outside [0.05, 0.95]"

    lm = level_map
    return MHFit(
        tau=tau,
        phi_hat=tuple(float(v) for v in phi_c[lm]),
        phi_mcse=tuple(float(v) for v in mcse_phi[lm]),
        phi_var=tuple(float(v) for v in var_c[lm]),
        exceed=tuple(float(v) for v in exc_c[lm]),
        exceed_mcse=tuple(float(v) for v in mcse_exc[lm]),
        acceptance_rate=acc_rate,
        draws=draws,
        seed=seed,
        warning=warning,
    )

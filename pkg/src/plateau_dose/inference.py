"""Posterior computation for the plateau-model family.

Deterministic numerical integration replaces MCMC so that every fit is
reproducible bit-for-bit:

* the slope is integrated by Gauss-Legendre in log slope over an envelope
  covering at least 99.99% of its gamma prior mass;
* conditional on each slope node, the intercept is integrated by
  Gauss-Hermite recentred and rescaled at the mode and curvature of the
  conditional posterior (the fixed prior-anchored rule cannot resolve the
  likelihood once a few cohorts accrue, so the rule adapts per dataset);
* exceedance probabilities P(phi_d > target) involve an indicator, which
  Gauss rules handle poorly, so they use the same slope nodes crossed with
  a dense trapezoid grid in the intercept, splitting the boundary cell
  analytically.

All accumulation happens in log space.  Weights are normalised to total
prior mass one, so an empty dataset has marginal likelihood exactly 1 and
prior-predictive moments.
"""

from __future__ import annotations

import math
import threading
from collections import OrderedDict
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np
from scipy.special import expit, gammaln, logsumexp

from .errors import InferenceError
from .models import DoseGrid, PlateauModel, PriorSpec, SubjectRecord, counts_by_level, logit

__all__ = [
    "QuadratureConfig",
    "Method",
    "ModelFit",
    "PosteriorSummary",
    "fit_model",
    "fit_model_counts",
    "fit_all_models",
    "model_posterior",
    "combine_selection",
    "combine_bma",
    "fit_blrm",
    "posterior_summary",
    "posterior_summary_counts",
]

# Dense intercept grid used only for exceedance probabilities.
_DENSE_POINTS = 513
_DENSE_SPAN_SDS = 8.5

# Prior mass the log-slope envelope must cover on each side.
_ENVELOPE_TAIL = 5e-5

_NEWTON_TOL = 1e-12
_NEWTON_MAX_ITER = 80
_NEWTON_MAX_STEP = 4.0


@dataclass(frozen=True)
class QuadratureConfig:
    """Node counts and slope envelope for the deterministic integrator.

    ``log_gamma1_halfwidth`` is the half width of the integration window in
    log slope around the prior mean; ``None`` selects ``6 / sqrt(shape)``.
    The window is widened further if needed to cover 99.99% of the prior.
    """

    gauss_hermite_nodes: int = 40
    gauss_legendre_nodes: int = 40
    log_gamma1_halfwidth: float | None = None

    def __post_init__(self):
        if self.gauss_hermite_nodes < 2 or self.gauss_legendre_nodes < 2:
            raise ValueError("node counts must be at least 2")
        if self.log_gamma1_halfwidth is not None and self.log_gamma1_halfwidth <= 0:
            raise ValueError("log_gamma1_halfwidth must be positive")

    def doubled(self) -> "QuadratureConfig":
        return QuadratureConfig(
            gauss_hermite_nodes=self.gauss_hermite_nodes * 2,
            gauss_legendre_nodes=self.gauss_legendre_nodes * 2,
            log_gamma1_halfwidth=self.log_gamma1_halfwidth,
        )


class Method(str, Enum):
    SELECTION = "selection"
    BMA = "bma"
    BLRM = "blrm"


@dataclass(frozen=True)
class ModelFit:
    """Marginal likelihood and per-dose posterior summaries of one model."""

    tau: int
    log_marginal: float
    phi_hat: tuple[float, ...]
    phi_var: tuple[float, ...]
    exceed: tuple[float, ...]


@dataclass(frozen=True)
class PosteriorSummary:
    """Per-dose estimates combined across models by one of the methods.

    ``selection_phi`` is the curve used to rank closeness to target when a
    dose is selected.  The mixture curve of the averaging method never
    flattens, which would drag the final choice toward the top of the
    grid, so for that method the mixture is flattened at the most probable
    plateau level; the other methods select on ``phi`` itself.
    """

    method: Method
    pi: tuple[float, ...]
    tau_hat: int
    phi: tuple[float, ...]
    var: tuple[float, ...]
    exceed: tuple[float, ...]
    selection_phi: tuple[float, ...] | None = None

    @property
    def selection_curve(self) -> tuple[float, ...]:
        return self.selection_phi if self.selection_phi is not None else self.phi


def _gamma_logpdf(x: np.ndarray, shape: float, rate: float) -> np.ndarray:
    return (shape * math.log(rate) - gammaln(shape)
            + (shape - 1.0) * np.log(x) - rate * x)


def _gamma_ppf(q: float, shape: float, rate: float) -> float:
    from scipy.stats import gamma as gamma_dist

    return float(gamma_dist.ppf(q, a=shape, scale=1.0 / rate))


class _TauBlock:
    """Per-plateau-level constants.

    Levels at and above tau share one effective log dose ratio, so all
    arrays carry only the distinct columns; ``level_map`` sends each level
    to its column.  The tau = 1 model has a flat curve and no slope
    dependence, which is represented as a single zero-slope node.
    """

    def __init__(self, engine: "_Engine", tau: int):
        grid = engine.grid
        L = grid.n_levels
        self.tau = tau
        if tau == 1:
            self.level_map = np.zeros(L, dtype=np.intp)
            self.c_vals = np.zeros(1)
            self.g1 = np.zeros(1)
            self.lw1 = np.zeros(1)
        else:
            self.level_map = np.array([min(l, tau) - 1 for l in range(1, L + 1)],
                                      dtype=np.intp)
            self.c_vals = np.array([grid.log_ratio(l) for l in range(1, tau + 1)])
            self.g1 = engine.g1_nodes
            self.lw1 = engine.lw1_norm

        # dense intercept tensors for the exceedance integral, (M, J, C)
        d_eta = (engine.dense_g0[:, None, None]
                 + self.g1[None, :, None] * self.c_vals[None, None, :])
        self.d_base = engine.dense_lp[:, None] + self.lw1[None, :]
        self.d_log_phi = -np.logaddexp(0.0, -d_eta)
        self.d_log_1mphi = -np.logaddexp(0.0, d_eta)

    def pooled_counts(self, n: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        C = len(self.c_vals)
        nc = np.zeros(C)
        yc = np.zeros(C)
        np.add.at(nc, self.level_map, n)
        np.add.at(yc, self.level_map, y)
        return nc, yc


class _Engine:
    """Shared quadrature state for one (grid, prior, config) triple."""

    def __init__(self, grid: DoseGrid, prior: PriorSpec, quad: QuadratureConfig):
        self.grid = grid
        self.prior = prior
        self.quad = quad
        self.logit_target = logit(grid.target)

        x, w = np.polynomial.hermite.hermgauss(quad.gauss_hermite_nodes)
        self.gh_x = x
        self.gh_lw = np.log(w) + x * x  # weights for integrating dx directly

        half = quad.log_gamma1_halfwidth
        if half is None:
            half = 6.0 / math.sqrt(prior.gamma1_shape)
        rate = prior.gamma1_rate
        u_lo = min(math.log(prior.gamma1_mean) - half,
                   math.log(_gamma_ppf(_ENVELOPE_TAIL, prior.gamma1_shape, rate)))
        u_hi = max(math.log(prior.gamma1_mean) + half,
                   math.log(_gamma_ppf(1.0 - _ENVELOPE_TAIL, prior.gamma1_shape, rate)))
        t, v = np.polynomial.legendre.leggauss(quad.gauss_legendre_nodes)
        u = 0.5 * (u_hi + u_lo) + 0.5 * (u_hi - u_lo) * t
        self.g1_nodes = np.exp(u)
        lw1 = (np.log(v) + math.log(0.5 * (u_hi - u_lo))
               + _gamma_logpdf(self.g1_nodes, prior.gamma1_shape, rate) + u)
        # renormalise the truncated slope prior to total mass one
        self.lw1_norm = lw1 - logsumexp(lw1)

        span = _DENSE_SPAN_SDS * prior.gamma0_sd
        self.dense_g0 = np.linspace(prior.gamma0_mean - span,
                                    prior.gamma0_mean + span, _DENSE_POINTS)
        self.dense_h = self.dense_g0[1] - self.dense_g0[0]
        z = (self.dense_g0 - prior.gamma0_mean) / prior.gamma0_sd
        self.dense_lp = (-0.5 * z * z
                         - math.log(prior.gamma0_sd * math.sqrt(2.0 * math.pi)))

        self._blocks: dict[int, _TauBlock] = {}
        self._fit_cache: OrderedDict[tuple, ModelFit] = OrderedDict()
        self._lock = threading.Lock()

    def block(self, tau: int) -> _TauBlock:
        blk = self._blocks.get(tau)
        if blk is None:
            with self._lock:
                blk = self._blocks.get(tau)
                if blk is None:
                    blk = _TauBlock(self, tau)
                    self._blocks[tau] = blk
        return blk

    def conditional_mode(self, g1: np.ndarray, cd: np.ndarray, nc: np.ndarray,
                         yc: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Mode and curvature scale of the intercept posterior per slope node.

        The target is strictly concave in the intercept, so damped Newton
        iteration converges from the prior mean.
        """
        mean, sd = self.prior.gamma0_mean, self.prior.gamma0_sd
        inv_var = 1.0 / (sd * sd)
        shift = g1[:, None] * cd[None, :]  # (J, C)
        mu = np.full(len(g1), mean)
        hess = np.full(len(g1), -inv_var)
        for _ in range(_NEWTON_MAX_ITER):
            p = expit(mu[:, None] + shift)
            grad = -(mu - mean) * inv_var + (yc - nc * p).sum(axis=1)
            hess = -inv_var - (nc * p * (1.0 - p)).sum(axis=1)
            step = np.clip(grad / hess, -_NEWTON_MAX_STEP, _NEWTON_MAX_STEP)
            mu -= step
            if np.abs(step).max() < _NEWTON_TOL:
                break
        return mu, 1.0 / np.sqrt(-hess)


_ENGINES: dict[tuple, _Engine] = {}
_ENGINES_LOCK = threading.Lock()
_FIT_CACHE_MAX = 200_000


def _engine_for(grid: DoseGrid, prior: PriorSpec, quad: QuadratureConfig) -> _Engine:
    key = (grid, prior, quad)
    eng = _ENGINES.get(key)
    if eng is None:
        with _ENGINES_LOCK:
            eng = _ENGINES.get(key)
            if eng is None:
                eng = _Engine(grid, prior, quad)
                _ENGINES[key] = eng
    return eng


def _exceed_from_dense(engine: _Engine, blk: _TauBlock, nc: np.ndarray,
                       yc: np.ndarray) -> np.ndarray:
    """P(phi > target) per distinct dose-ratio column.

    Integrates the joint density over the half plane where the linear
    predictor clears the logit of the target.  The intercept direction uses
    a trapezoid cumulative; cutting the integral mid-bump leaves an O(h^2)
    Euler-Maclaurin boundary term, which is removed with the analytic score
    at the first grid point past the boundary plus an exact Simpson rule on
    the sub-cell piece.
    """
    h = engine.dense_h
    g = engine.dense_g0
    mean0, sd0 = engine.prior.gamma0_mean, engine.prior.gamma0_sd
    log_norm0 = -math.log(sd0 * math.sqrt(2.0 * math.pi))
    mc = nc - yc

    log_f = (blk.d_base
             + np.tensordot(blk.d_log_phi, yc, axes=(2, 0))
             + np.tensordot(blk.d_log_1mphi, mc, axes=(2, 0)))
    shift = log_f.max()
    if not np.isfinite(shift):
        raise InferenceError("exceedance integrand underflowed",
                             {"tau": blk.tau, "n": nc.tolist(), "y": yc.tolist()})
    P = np.exp(log_f - shift)  # (M, J)

    cells = 0.5 * (P[:-1] + P[1:]) * h
    right = np.zeros_like(P)
    right[:-1] = np.cumsum(cells[::-1], axis=0)[::-1]
    total = right[0].sum()
    if total <= 0.0 or not np.isfinite(total):
        raise InferenceError("exceedance normaliser vanished",
                             {"tau": blk.tau, "n": nc.tolist(), "y": yc.tolist()})

    def point_density(x: np.ndarray, idx: np.ndarray) -> np.ndarray:
        # joint density (same shift as P) at intercept x for slope nodes idx
        eta = x[:, None] + blk.g1[idx, None] * blk.c_vals[None, :]  # (#idx, C)
        ll = (-np.logaddexp(0.0, -eta) @ yc) + (-np.logaddexp(0.0, eta) @ mc)
        z = (x - mean0) / sd0
        return np.exp(-0.5 * z * z + log_norm0 + blk.lw1[idx] + ll - shift)

    def score(x: np.ndarray, idx: np.ndarray) -> np.ndarray:
        # d log f / d intercept at x for slope nodes idx
        eta = x[:, None] + blk.g1[idx, None] * blk.c_vals[None, :]
        return -(x - mean0) / (sd0 * sd0) + (yc - nc * expit(eta)).sum(axis=1)

    C = len(blk.c_vals)
    n_cols = P.shape[1]
    out = np.empty(C)
    for ci in range(C):
        b = engine.logit_target - blk.g1 * blk.c_vals[ci]  # (J,)
        num = np.zeros(n_cols)
        below = b <= g[0]
        mid = ~(below | (b >= g[-1]))
        num[below] = right[0, below]
        if mid.any():
            idx = np.flatnonzero(mid)
            b_m = b[idx]
            k = np.minimum(np.ceil((b_m - g[0]) / h).astype(np.intp), len(g) - 1)
            gk = g[k]
            # Simpson on the sub-cell [b, g_k] with exact endpoint densities,
            # then the trapezoid tail with its Euler-Maclaurin repair
            fb = point_density(b_m, idx)
            fmid = point_density(0.5 * (b_m + gk), idx)
            fk = P[k, idx]
            sub = (gk - b_m) / 6.0 * (fb + 4.0 * fmid + fk)
            corr = (h * h / 12.0) * fk * score(gk, idx)
            num[idx] = np.clip(right[k, idx] + corr + sub, 0.0, right[0, idx])
        out[ci] = num.sum() / total
    return np.minimum(out, 1.0)


def _fit_counts(engine: _Engine, tau: int, n: np.ndarray, y: np.ndarray) -> ModelFit:
    blk = engine.block(tau)
    nc, yc = blk.pooled_counts(n, y)
    n_total = int(n.sum())

    mu, scale = engine.conditional_mode(blk.g1, blk.c_vals, nc, yc)

    sqrt2 = math.sqrt(2.0)
    g0 = mu[None, :] + sqrt2 * scale[None, :] * engine.gh_x[:, None]  # (n0, J)
    eta = g0[:, :, None] + blk.g1[None, :, None] * blk.c_vals[None, None, :]
    log_phi = -np.logaddexp(0.0, -eta)
    log_1mphi = -np.logaddexp(0.0, eta)
    log_lik = (np.tensordot(log_phi, yc, axes=(2, 0))
               + np.tensordot(log_1mphi, nc - yc, axes=(2, 0)))  # (n0, J)

    z = (g0 - engine.prior.gamma0_mean) / engine.prior.gamma0_sd
    log_prior0 = (-0.5 * z * z
                  - math.log(engine.prior.gamma0_sd * math.sqrt(2.0 * math.pi)))
    log_joint = (engine.gh_lw[:, None] + np.log(sqrt2 * scale)[None, :]
                 + log_prior0 + log_lik + blk.lw1[None, :])

    norm = logsumexp(log_joint)
    if not np.isfinite(norm):
        raise InferenceError(
            "all quadrature weights underflowed",
            {"tau": tau, "n": n.tolist(), "y": y.tolist(),
             "nodes": (engine.quad.gauss_hermite_nodes,
                       engine.quad.gauss_legendre_nodes)},
        )
    log_marginal = 0.0 if n_total == 0 else float(norm)
    post = np.exp(log_joint - norm)

    phi = expit(eta)
    phi_c = np.einsum("ij,ijc->c", post, phi)
    phi2_c = np.einsum("ij,ijc->c", post, phi * phi)
    var_c = np.maximum(phi2_c - phi_c * phi_c, 0.0)
    exceed_c = _exceed_from_dense(engine, blk, nc, yc)

    lm = blk.level_map
    return ModelFit(
        tau=tau,
        log_marginal=log_marginal,
        phi_hat=tuple(float(v) for v in phi_c[lm]),
        phi_var=tuple(float(v) for v in var_c[lm]),
        exceed=tuple(float(v) for v in exceed_c[lm]),
    )


def _fit_cached(engine: _Engine, tau: int, n: np.ndarray, y: np.ndarray) -> ModelFit:
    key = (tau, tuple(int(v) for v in n), tuple(int(v) for v in y))
    cache = engine._fit_cache
    with engine._lock:
        hit = cache.get(key)
        if hit is not None:
            cache.move_to_end(key)
            return hit
    fit = _fit_counts(engine, tau, n, y)
    with engine._lock:
        cache[key] = fit
        if len(cache) > _FIT_CACHE_MAX:
            cache.popitem(last=False)
    return fit


def fit_model(model: PlateauModel, data: Sequence[SubjectRecord], prior: PriorSpec,
              quad: QuadratureConfig = QuadratureConfig()) -> ModelFit:
    """Fit one plateau model: marginal likelihood, moments, exceedance."""
    n, y = counts_by_level(data, model.grid.n_levels)
    engine = _engine_for(model.grid, prior, quad)
    return _fit_cached(engine, model.tau, n, y)


def fit_model_counts(grid: DoseGrid, tau: int, n_by_level, y_by_level,
                     prior: PriorSpec,
                     quad: QuadratureConfig = QuadratureConfig()) -> ModelFit:
    """Count-based fast path used by the trial engines."""
    engine = _engine_for(grid, prior, quad)
    return _fit_cached(engine, tau,
                       np.asarray(n_by_level, dtype=np.int64),
                       np.asarray(y_by_level, dtype=np.int64))


def fit_all_models(data: Sequence[SubjectRecord], grid: DoseGrid, prior: PriorSpec,
                   quad: QuadratureConfig = QuadratureConfig()) -> list[ModelFit]:
    """Fit every candidate plateau level 1..L."""
    n, y = counts_by_level(data, grid.n_levels)
    engine = _engine_for(grid, prior, quad)
    return [_fit_cached(engine, tau, n, y) for tau in range(1, grid.n_levels + 1)]


def model_posterior(fits: Sequence[ModelFit], prior: PriorSpec) -> tuple[float, ...]:
    """Posterior model probabilities from log marginals and the model prior."""
    log_p = np.array([f.log_marginal for f in fits])
    with np.errstate(divide="ignore"):
        log_p = log_p + np.log(np.asarray(prior.model_prior[: len(fits)]))
    norm = logsumexp(log_p)
    if not np.isfinite(norm):
        raise InferenceError("all model marginals are zero",
                             {"log_marginals": [f.log_marginal for f in fits]})
    pi = np.exp(log_p - norm)
    pi = pi / pi.sum()
    return tuple(float(v) for v in pi)


def combine_selection(fits: Sequence[ModelFit], pi: Sequence[float]) -> PosteriorSummary:
    """Adopt the single model with the largest posterior probability.

    Ties go to the lowest index, i.e. the earliest plateau.
    """
    tau_hat = int(np.argmax(pi)) + 1
    sel = fits[tau_hat - 1]
    return PosteriorSummary(
        method=Method.SELECTION,
        pi=tuple(float(v) for v in pi),
        tau_hat=tau_hat,
        phi=sel.phi_hat,
        var=sel.phi_var,
        exceed=sel.exceed,
    )


def combine_bma(fits: Sequence[ModelFit], pi: Sequence[float]) -> PosteriorSummary:
    """Mixture of the per-model posteriors weighted by model probability."""
    pi_arr = np.asarray(pi)
    phi_mat = np.array([f.phi_hat for f in fits])  # (T, L)
    var_mat = np.array([f.phi_var for f in fits])
    exc_mat = np.array([f.exceed for f in fits])
    phi = pi_arr @ phi_mat
    second_moment = pi_arr @ (var_mat + phi_mat * phi_mat)
    var = np.maximum(second_moment - phi * phi, 0.0)
    exceed = pi_arr @ exc_mat
    tau_hat = int(np.argmax(pi_arr)) + 1
    flattened = tuple(float(phi[min(lvl, tau_hat) - 1])
                      for lvl in range(1, len(phi) + 1))
    return PosteriorSummary(
        method=Method.BMA,
        pi=tuple(float(v) for v in pi_arr),
        tau_hat=tau_hat,
        phi=tuple(float(v) for v in phi),
        var=tuple(float(v) for v in var),
        exceed=tuple(float(v) for v in exceed),
        selection_phi=flattened,
    )


def fit_blrm(data: Sequence[SubjectRecord], grid: DoseGrid, prior: PriorSpec,
             quad: QuadratureConfig = QuadratureConfig()) -> PosteriorSummary:
    """Plain monotone logistic comparator: the top-plateau model alone.

    On the dose grid the model whose plateau sits at the top level
    coincides with a logistic curve that never flattens, so fitting only
    that member reproduces a standard Bayesian logistic regression.
    """
    n, y = counts_by_level(data, grid.n_levels)
    engine = _engine_for(grid, prior, quad)
    return _blrm_from_fit(grid, _fit_cached(engine, grid.n_levels, n, y))


def _blrm_from_fit(grid: DoseGrid, fit: ModelFit) -> PosteriorSummary:
    L = grid.n_levels
    return PosteriorSummary(
        method=Method.BLRM,
        pi=tuple([0.0] * (L - 1) + [1.0]),
        tau_hat=L,
        phi=fit.phi_hat,
        var=fit.phi_var,
        exceed=fit.exceed,
    )


def posterior_summary(data: Sequence[SubjectRecord], grid: DoseGrid, prior: PriorSpec,
                      quad: QuadratureConfig, method: Method | str,
                      ) -> tuple[PosteriorSummary, list[ModelFit]]:
    """Full refit under one combining method; returns the per-model fits too."""
    n, y = counts_by_level(data, grid.n_levels)
    return posterior_summary_counts(grid, n, y, prior, quad, method)


def posterior_summary_counts(grid: DoseGrid, n, y, prior: PriorSpec,
                             quad: QuadratureConfig, method: Method | str,
                             ) -> tuple[PosteriorSummary, list[ModelFit]]:
    method = Method(method)
    engine = _engine_for(grid, prior, quad)
    n = np.asarray(n, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if method is Method.BLRM:
        fit = _fit_cached(engine, grid.n_levels, n, y)
        return _blrm_from_fit(grid, fit), [fit]
    fits = [_fit_cached(engine, tau, n, y) for tau in range(1, grid.n_levels + 1)]
    pi = model_posterior(fits, prior)
    if method is Method.SELECTION:
        return combine_selection(fits, pi), fits
    return combine_bma(fits, pi), fits

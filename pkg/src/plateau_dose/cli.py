"""Command-line entry points.

    plateau-dose simulate --method selection --L 3 --n 18 --scenario 1 \
        --reps 1000 --seed 42 --out results.csv --report results.txt
    plateau-dose validate config.yaml
    plateau-dose serve --addr 127.0.0.1:8732 --data-dir ./trial-data
"""

from __future__ import annotations

import argparse
import os
import sys

import yaml

from .config import load_config
from .design import DesignConfig, startup_cohort_size
from .errors import ConfigurationError
from .inference import InferenceError, Method, QuadratureConfig
from .models import DoseGrid, default_prior
from .report import write_oc_csv, write_plot_data, write_report
from .simulation import (
    Scenario,
    builtin_scenarios,
        run_operating_characteristics,
    simulate_trial,
)

_DEFAULT_GUESSES = {
    3: (0.5, 0.65, 0.8),
    4: (0.35, 0.5, 0.65, 0.8),
    5: (0.35, 0.5, 0.65, 0.8, 0.95),
}


def default_grid(n_levels: int, target: float = 0.5) -> DoseGrid:
    if n_levels not in _DEFAULT_GUESSES:
        raise ConfigurationError("built-in grids exist for L in {3, 4, 5}")
    return DoseGrid.default(n_levels, target, _DEFAULT_GUESSES[n_levels])


def _scenario_from_arg(arg: str, n_levels: int) -> list[Scenario]:
    if arg == "all":
        return builtin_scenarios(n_levels)
    if arg.isdigit():
        idx = int(arg)
        scenarios = builtin_scenarios(n_levels)
        if not 1 <= idx <= len(scenarios):
            raise ConfigurationError(f"scenario index must be 1..{len(scenarios)}")
        return [scenarios[idx - 1]]
    with open(arg, "r", encoding="utf-8") as fh:
        doc = yaml.safe_load(fh)
    return [Scenario(
        name=str(doc.get("name", os.path.basename(arg))),
        phi=tuple(doc["phi"]),
        psi=tuple(doc["psi"]),
        mad_truth=doc.get("mad_truth"),
    )]


def cmd_simulate(args: argparse.Namespace) -> int:
    try:
        grid = default_grid(args.L)
        config = DesignConfig(
            grid=grid, n=args.n, k_model=args.k_model, c_f=args.c_f,
            s_base=args.s_base, method=Method(args.method),
            quad=QuadratureConfig(gauss_hermite_nodes=args.gh_nodes,
                                  gauss_legendre_nodes=args.gl_nodes),
        )
        scenarios = _scenario_from_arg(args.scenario, args.L)
    except (ConfigurationError, FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    results = []
    plot_rows = []
    try:
        for scenario in scenarios:
            oc = run_operating_characteristics(
                scenario, config, reps=args.reps, master_seed=args.seed,
                workers=args.workers,
            )
            results.append(oc)
            sel = ", ".join(f"{v:.1f}" for v in oc.selection_pct)
            print(f"{scenario.name} [{oc.method}, L={oc.n_levels}, n={oc.n_max}]: "
                  f"selection% = ({sel}), early termination = "
                  f"{oc.early_termination_pct:.1f}%, mean n = {oc.total_mean:.1f}")
            if args.plot_data:
                import numpy as np
                for rep in range(args.reps):
                    res = simulate_trial(
                        scenario, config,
                        np.random.SeedSequence(entropy=args.seed, spawn_key=(rep,)),
                    )
                    plot_rows.append((scenario.name, oc.method, oc.n_max, rep, res))
    except InferenceError as exc:
        print(f"inference failure: {exc}; diagnostics: {exc.diagnostics}",
              file=sys.stderr)
        return 1

    if args.out:
        write_oc_csv(args.out, results)
        print(f"wrote {args.out}")
    if args.report:
        write_report(args.report, results)
        print(f"wrote {args.report}")
    if args.plot_data:
        write_plot_data(args.plot_data, plot_rows)
        print(f"wrote {args.plot_data}")
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        config = load_config(args.config)
    except (ConfigurationError, OSError, yaml.YAMLError) as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return 2
    grid = config.grid
    prior = config.prior
    k_start = startup_cohort_size(config.n, grid.n_levels, config.k_model)
    print(f"levels: {list(grid.levels)} (reference level {grid.ref_level}, "
          f"target {grid.target})")
    print(f"method: {config.method.value}, n = {config.n}, "
          f"k_model = {config.k_model}, c_f = {config.c_f}")
    print(f"k_start = {k_start}")
    print(f"prior: gamma0 ~ N({prior.gamma0_mean:.6g}, {prior.gamma0_sd:.6g}^2), "
          f"gamma1 ~ Gamma(shape={prior.gamma1_shape:.6g}, "
          f"mean={prior.gamma1_mean:.6g})")
    print(f"model prior: {[round(p, 6) for p in prior.model_prior]}")
    print("config OK")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    from .service import serve

    data_dir = args.data_dir or os.environ.get("PLATEAU_DOSE_DATA_DIR", "./trial-data")
    os.makedirs(data_dir, exist_ok=True)
    try:
        serve(addr=args.addr, data_dir=data_dir)
    except OSError as exc:
        print(f"cannot serve: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plateau-dose",
        description="two-stage plateau-aware Bayesian dose-finding",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run scenario simulations")
    sim.add_argument("--method", choices=[m.value for m in Method],
                     default="selection")
    sim.add_argument("--L", type=int, default=3, help="number of dose levels")
    sim.add_argument("--n", type=int, default=24, help="maximum sample size")
    sim.add_argument("--scenario", default="all",
                     help="1..8, 'all', or a scenario config path")
    sim.add_argument("--reps", type=int, default=1000)
    sim.add_argument("--seed", type=int, default=20240001)
    sim.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    sim.add_argument("--k-model", type=int, default=2)
    sim.add_argument("--c-f", type=float, default=0.05)
    sim.add_argument("--s-base", type=float, default=0.05)
    sim.add_argument("--gh-nodes", type=int, default=40)
    sim.add_argument("--gl-nodes", type=int, default=40)
    sim.add_argument("--out", help="summary CSV path")
    sim.add_argument("--report", help="table report path")
    sim.add_argument("--plot-data", help="per-replicate plot data CSV path")
    sim.set_defaults(func=cmd_simulate)

    val = sub.add_parser("validate", help="check a config document")
    val.add_argument("config", help="YAML/JSON config path")
    val.set_defaults(func=cmd_validate)

    srv = sub.add_parser("serve", help="run the trial-conduct HTTP service")
    srv.add_argument("--addr", default=None, help="host:port (or PLATEAU_DOSE_ADDR)")
    srv.add_argument("--data-dir", default=None,
                     help="event-log directory (or PLATEAU_DOSE_DATA_DIR)")
    srv.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

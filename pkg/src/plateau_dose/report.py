"""Fixed-schema result files: summary CSV, human-readable table, plot data.

The CSV has one row per scenario/method/n combination; the text report
mirrors the benchmark-table layout (rows are sample sizes, columns are
dose levels as "selection% (mean allocated)", early termination, and
total enrollment) so results can be eyeballed against published values.
"""

from __future__ import annotations

import csv
from collections import defaultdict
from typing import Iterable, Sequence

from .simulation import OperatingCharacteristics, TrialResult

__all__ = ["write_oc_csv", "format_report", "write_report", "write_plot_data"]


def _fmt(x: float) -> str:
    return format(x, ".6g")


def write_oc_csv(path: str, results: Sequence[OperatingCharacteristics]) -> None:
    """One row per scenario/method/n; per-level columns sized to the grid."""
    if not results:
        raise ValueError("no results to write")
    L = results[0].n_levels
    if any(r.n_levels != L for r in results):
        raise ValueError("all results in one CSV must share the grid size")
    header = (["method", "n_levels", "n", "scenario"]
              + [f"sel_pct_{l}" for l in range(1, L + 1)]
              + [f"mean_n_{l}" for l in range(1, L + 1)]
              + ["early_term_pct", "total_mean", "total_sd", "reps", "seed"])
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for r in results:
            writer.writerow(
                [r.method, r.n_levels, r.n_max, r.scenario]
                + [_fmt(v) for v in r.selection_pct]
                + [_fmt(v) for v in r.mean_alloc]
                + [_fmt(r.early_termination_pct), _fmt(r.total_mean),
                   _fmt(r.total_sd), r.reps, r.seed]
            )


def format_report(results: Sequence[OperatingCharacteristics]) -> str:
    """Benchmark-style table, grouped by method then scenario."""
    if not results:
        return ""
    L = results[0].n_levels
    groups: dict[tuple[str, str], list[OperatingCharacteristics]] = defaultdict(list)
    for r in results:
        groups[(r.method, r.scenario)].append(r)

    cell_w = 12
    lines: list[str] = []
    current_method = None
    for (method, scenario), rows in groups.items():
        if method != current_method:
            current_method = method
            lines.append(f"=== method: {method} (L={L}) ===")
        lines.append(f"-- {scenario} --")
        header = ("".ljust(8)
                  + "".join(f"dose {l}".rjust(cell_w) for l in range(1, L + 1))
                  + "early term".rjust(cell_w) + "total n".rjust(cell_w + 2))
        lines.append(header)
        for r in sorted(rows, key=lambda r: r.n_max):
            cells = [
                f"{sel:.1f} ({alloc:.1f})"
                for sel, alloc in zip(r.selection_pct, r.mean_alloc)
            ]
            lines.append(
                f"n = {r.n_max}".ljust(8)
                + "".join(c.rjust(cell_w) for c in cells)
                + f"{r.early_termination_pct:.1f}".rjust(cell_w)
                + f"{r.total_mean:.1f} ({r.total_sd:.1f})".rjust(cell_w + 2)
            )
        lines.append("")
    return "\n".join(lines)


def write_report(path: str, results: Sequence[OperatingCharacteristics]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_report(results))


def write_plot_data(path: str, rows: Iterable[tuple[str, str, int, int, TrialResult]]) -> None:
    """Per-replicate selection and allocation counts for bar/box plots.

    ``rows`` yields (scenario, method, n, replicate, result) tuples.
    """
    rows = list(rows)
    if not rows:
        raise ValueError("no replicates to write")
    L = len(rows[0][4].alloc)
    header = (["scenario", "method", "n", "replicate", "selected", "stop_reason",
               "n_enrolled"] + [f"alloc_{l}" for l in range(1, L + 1)])
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for scenario, method, n, rep, result in rows:
            writer.writerow(
                [scenario, method, n, rep,
                 "" if result.selection is None else result.selection,
                 result.stop_reason, result.n_enrolled]
                + list(result.alloc)
            )

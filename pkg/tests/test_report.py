import csv

import pytest

from plateau_dose.design import DesignConfig
from plateau_dose.models import DoseGrid
from plateau_dose.report import format_report, write_oc_csv, write_plot_data, write_report
from plateau_dose.simulation import (
    builtin_scenarios,
    run_operating_characteristics,
    simulate_trial,
)

GRID3 = DoseGrid.default(3, 0.5, (0.5, 0.65, 0.8))


@pytest.fixture(scope="module")
def results():
    cfg = DesignConfig(grid=GRID3, n=18, method="selection")
    scens = builtin_scenarios(3)[:2]
    return [run_operating_characteristics(s, cfg, reps=25, master_seed=3)
            for s in scens]


def test_csv_schema(tmp_path, results):
    path = tmp_path / "oc.csv"
    write_oc_csv(str(path), results)
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["method", "n_levels", "n", "scenario",
                       "sel_pct_1", "sel_pct_2", "sel_pct_3",
                       "mean_n_1", "mean_n_2", "mean_n_3",
                       "early_term_pct", "total_mean", "total_sd", "reps", "seed"]
    assert len(rows) == 3
    assert rows[1][0] == "selection" and rows[1][3] == "scenario_1"


def test_csv_deterministic_bytes(tmp_path, results):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    write_oc_csv(str(p1), results)
    write_oc_csv(str(p2), results)
    assert p1.read_bytes() == p2.read_bytes()


def test_report_layout(results):
    text = format_report(results)
    assert "method: selection" in text
    assert "scenario_1" in text and "scenario_2" in text
    assert "n = 18" in text
    assert "dose 1" in text and "early term" in text
    # cells look like "81.2 (8.9)"
    assert "(" in text.splitlines()[3]


def test_write_report(tmp_path, results):
    path = tmp_path / "table.txt"
    write_report(str(path), results)
    assert path.read_text() == format_report(results)


def test_plot_data(tmp_path):
    cfg = DesignConfig(grid=GRID3, n=18, method="selection")
    scenario = builtin_scenarios(3)[0]
    rows = []
    for rep in range(6):
        res = simulate_trial(scenario, cfg, rep)
        rows.append((scenario.name, "selection", 18, rep, res))
    path = tmp_path / "plot.csv"
    write_plot_data(str(path), rows)
    with open(path, newline="") as fh:
        parsed = list(csv.reader(fh))
    assert parsed[0] == ["scenario", "method", "n", "replicate", "selected",
                         "stop_reason", "n_enrolled", "alloc_1", "alloc_2", "alloc_3"]
    assert len(parsed) == 7
    for row in parsed[1:]:
        assert int(row[6]) == sum(int(v) for v in row[7:10])
